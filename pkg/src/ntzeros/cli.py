"""Command-line front end: worked-answer oracle, features, train, evaluate."""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import Callable, NamedTuple

import numpy as np

from . import arith, curves, diophantine, modular, primes
from .features import build_dataset, parse_zero_csv, read_feature_csv, write_feature_csv
from .forest import ForestClassifier
from .gbdt import GbdtClassifier
from .metrics import evaluate_probs
from .persist import ModelDatasetMismatch, load_model, save_model
from .split import InsufficientClassSamples, split_by_label_quota


class UsageError(Exception):
    """Bad oracle index or argument arity; exits with status 2."""


class OracleSpec(NamedTuple):
    usage: str
    arity: Callable[[int], bool]
    fn: Callable[[list[int]], str]


def _point(x: int, y: int) -> curves.ECPoint:
    return curves.ECPoint(x, y)


def _fmt_point(pt: curves.ECPoint) -> str:
    return "infinity" if pt.is_infinity else f"({pt.x}, {pt.y})"


def _oracle_pell(a: list[int]) -> str:
    sol = diophantine.pell_fundamental(a[0])
    return f"({sol.x}, {sol.y})"


def _oracle_cf(a: list[int]) -> str:
    e = diophantine.cf_expand_sqrt(a[0])
    return f"[{e.a0}; {', '.join(str(t) for t in e.period)}]"


def _oracle_hensel(a: list[int]) -> str:
    p, root, coeffs = a[0], a[1], a[2:]
    return str(modular.hensel_lift(modular.PolyInt(tuple(coeffs)), p, root))


def _oracle_sqrt(a: list[int]) -> str:
    lo, hi = modular.sqrt_mod(a[0], a[1])
    return f"({lo}, {hi})"


def _oracle_congruence(a: list[int]) -> str:
    sol = arith.solve_linear_congruence(a[0], a[1], a[2])
    text = f"x = {sol.base} (mod {sol.modulus})"
    if sol.count > 1:
        text += f"; {sol.count} classes mod {a[2]}"
    return text


def _oracle_crt(a: list[int]) -> str:
    residues, moduli = a[0::2], a[1::2]
    return str(arith.crt(residues, moduli))


def _oracle_rational_roots(a: list[int]) -> str:
    roots = diophantine.rational_roots(list(a))
    return ", ".join(str(r) for r in roots) if roots else "none"


def _oracle_two_squares(a: list[int]) -> str:
    w = diophantine.two_squares_decompose(a[0])
    return f"({w.x}, {w.y})" if w.representable else "not representable"


def _oracle_ec_mul(a: list[int]) -> str:
    k, x, y, ca, cb, p = a
    curve = curves.CurveParams(ca, cb, p)
    return _fmt_point(curves.ec_scalar_mul(k, _point(x, y), curve))


def _oracle_ec_double(a: list[int]) -> str:
    x, y, ca, cb, p = a
    curve = curves.CurveParams(ca, cb, p)
    return _fmt_point(curves.ec_double(_point(x, y), curve))


def _oracle_rsa(a: list[int]) -> str:
    key = curves.rsa_keygen_from_primes(a[0], a[1], a[2])
    return f"n={key.n} phi={key.phi} d={key.d}"


ORACLE_TABLE: dict[int, OracleSpec] = {
    1: OracleSpec("1 D: fundamental solution of x^2 - D*y^2 = 1",
                  lambda n: n == 1, _oracle_pell),
    2: OracleSpec("2 A B: gcd by Euclid's algorithm",
                  lambda n: n == 2, lambda a: str(arith.gcd_euclid(a[0], a[1]))),
    3: OracleSpec("3 A N: inverse of A mod N",
                  lambda n: n == 2, lambda a: str(arith.mod_inverse(a[0], a[1]))),
    4: OracleSpec("4 D: continued fraction of sqrt(D) as [a0; period]",
                  lambda n: n == 1, _oracle_cf),
    5: OracleSpec("5 P A C0 C1 ...: lift root A of the polynomial (ascending "
                  "coefficients Ci) from mod P to mod P^2",
                  lambda n: n >= 3, _oracle_hensel),
    6: OracleSpec("6 P: smallest primitive root mod P",
                  lambda n: n == 1, lambda a: str(modular.primitive_root(a[0]))),
    7: OracleSpec("7 A P: both square roots of A mod P",
                  lambda n: n == 2, _oracle_sqrt),
    8: OracleSpec("8 B E M: B^E mod M by square-and-multiply",
                  lambda n: n == 3, lambda a: str(arith.pow_mod(a[0], a[1], a[2]))),
    9: OracleSpec("9 N: trial-division primality verdict",
                  lambda n: n == 1, lambda a: primes.is_prime_trial(a[0]).verdict.value),
    10: OracleSpec("10 N A: Euler-criterion probable-prime verdict with base A",
                   lambda n: n == 2, lambda a: primes.euler_criterion_test(a[0], a[1]).verdict.value),
    11: OracleSpec("11 N: primes up to N",
                   lambda n: n == 1,
                   lambda a: " ".join(str(p) for p in primes.sieve_eratosthenes(a[0]))),
    13: OracleSpec("13 A B: extended Euclid (g, x, y) with A*x + B*y = g",
                   lambda n: n == 2,
                   lambda a: "({}, {}, {})".format(*arith.ext_gcd(a[0], a[1]))),
    14: OracleSpec("14 N: Fermat factorization of odd composite N",
                   lambda n: n == 1,
                   lambda a: "({}, {})".format(*primes.fermat_factor(a[0]))),
    15: OracleSpec("15 R1 M1 R2 M2 ...: CRT solution for x = Ri (mod Mi)",
                   lambda n: n >= 2 and n % 2 == 0, _oracle_crt),
    16: OracleSpec("16 A B N: solve A*x = B (mod N)",
                   lambda n: n == 3, _oracle_congruence),
    17: OracleSpec("17 C0 C1 ...: rational roots of the polynomial with "
                   "coefficients Ci in ascending degree order",
                   lambda n: n >= 1, _oracle_rational_roots),
    18: OracleSpec("18 P Q: greedy Egyptian fraction denominators of P/Q",
                   lambda n: n == 2,
                   lambda a: " ".join(str(d) for d in diophantine.egyptian_greedy(a[0], a[1]))),
    19: OracleSpec("19 N: Carmichael function of N",
                   lambda n: n == 1, lambda a: str(primes.carmichael(a[0]))),
    20: OracleSpec("20 N B1 [B2 ...]: Fermat primality test with the given bases",
                   lambda n: n >= 2,
                   lambda a: primes.fermat_test(a[0], a[1:]).verdict.value),
    21: OracleSpec("21 N: Euler phi of 1..N by sieve",
                   lambda n: n == 1,
                   lambda a: " ".join(str(v) for v in primes.totient_sieve(a[0])[1:])),
    22: OracleSpec("22 N: Zeckendorf decomposition, largest part first",
                   lambda n: n == 1,
                   lambda a: " ".join(str(f) for f in diophantine.zeckendorf(a[0]))),
    23: OracleSpec("23 A B: gcd by the binary algorithm",
                   lambda n: n == 2, lambda a: str(arith.gcd_binary(a[0], a[1]))),
    24: OracleSpec("24 N: N as a sum of two squares, or 'not representable'",
                   lambda n: n == 1, _oracle_two_squares),
    25: OracleSpec("25 G H P: discrete log of H base G mod P (baby-step giant-step)",
                   lambda n: n == 3,
                   lambda a: str(modular.discrete_log_bsgs(a[0], a[1], a[2]))),
    26: OracleSpec("26 K X Y A B P: K*(X, Y) on y^2 = x^3 + A*x + B over F_P",
                   lambda n: n == 6, _oracle_ec_mul),
    27: OracleSpec("27 P Q E: RSA key from primes P, Q and exponent E",
                   lambda n: n == 3, _oracle_rsa),
    28: OracleSpec("28 X Y A B P: doubling of (X, Y) on y^2 = x^3 + A*x + B over F_P",
                   lambda n: n == 5, _oracle_ec_double),
    29: OracleSpec("29 P: Lucas-Lehmer verdict on the Mersenne number 2^P - 1",
                   lambda n: n == 1, lambda a: primes.lucas_lehmer(a[0]).verdict.value),
    30: OracleSpec("30 D P: decomposition of odd prime P in Q(sqrt(D))",
                   lambda n: n == 2,
                   lambda a: primes.decompose_prime_ideal(a[0], a[1]).kind.value),
}


def cmd_oracle(args: argparse.Namespace) -> int:
    index = args.index
    spec = ORACLE_TABLE.get(index)
    if spec is None:
        raise UsageError(f"unknown task index {index} (known: {sorted(ORACLE_TABLE)})")
    if not spec.arity(len(args.args)):
        raise UsageError(f"bad argument count for index {index}; usage: {spec.usage}")
    print(spec.fn(args.args))
    return 0


def cmd_features(args: argparse.Namespace) -> int:
    records = parse_zero_csv(args.input)
    dataset = build_dataset(records, engineered=not args.raw, normalization=args.normalization)
    write_feature_csv(args.output, dataset.X, dataset.y, list(dataset.feature_names))
    print(f"wrote {dataset.X.shape[0]} rows x {dataset.X.shape[1]} features to {args.output}")
    return 0


def _write_manifest(path: str | Path, split, n_rows: int) -> None:
    role = {}
    for name, idx in (("train", split.train), ("validation", split.validation), ("test", split.test)):
        for i in idx:
            role[int(i)] = name
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["row", "role"])
        for i in range(n_rows):
            writer.writerow([i, role.get(i, "unused")])


def _read_manifest(path: str | Path) -> dict[str, list[int]]:
    roles: dict[str, list[int]] = {"train": [], "validation": [], "test": [], "unused": []}
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != ["row", "role"]:
            raise ModelDatasetMismatch(f"bad manifest header {header!r}")
        for row in reader:
            if not row:
                continue
            if len(row) != 2 or row[1] not in roles:
                raise ModelDatasetMismatch(f"bad manifest row {row!r}")
            roles[row[1]].append(int(row[0]))
    return roles


def cmd_train(args: argparse.Namespace) -> int:
    X, y, names = read_feature_csv(args.features)
    split = split_by_label_quota(
        y,
        seed=args.seed,
        small_q_cut=args.small_q_cut,
        q_max=args.q_max,
        validation_fraction=args.val_fraction,
        test_quota_small=args.test_quota_small,
        test_quota_large=args.test_quota_large,
    )
    if args.model == "forest":
        clf = ForestClassifier(
            n_trees=args.trees,
            max_depth=args.max_depth,
            seed=args.seed,
        )
        clf.fit(X[split.train], y[split.train])
    else:
        early = args.early_stop if args.early_stop > 0 else None
        clf = GbdtClassifier(
            n_rounds=args.rounds,
            learning_rate=args.learning_rate,
            max_leaves=args.leaves,
            early_stopping_rounds=early,
            seed=args.seed,
        )
        if early is not None and split.validation.size == 0:
            raise InsufficientClassSamples(
                "early stopping needs validation rows; raise --val-fraction or pass --early-stop 0"
            )
        X_val = X[split.validation] if split.validation.size else None
        y_val = y[split.validation] if split.validation.size else None
        clf.fit(X[split.train], y[split.train], X_val, y_val)
    clf.feature_names_in_ = names
    save_model(clf, args.model_out)
    manifest = args.manifest_out or str(args.model_out) + ".split.csv"
    _write_manifest(manifest, split, X.shape[0])
    extra = f", best_iteration {clf.best_iteration_}" if hasattr(clf, "best_iteration_") else ""
    print(
        f"trained {args.model} on {split.train.size} rows "
        f"({split.validation.size} validation, {split.test.size} test){extra}; "
        f"model -> {args.model_out}, split -> {manifest}"
    )
    return 0


def _derived_path(report_out: str, tag: str) -> str:
    p = Path(report_out)
    return str(p.with_name(p.stem + f".{tag}" + (p.suffix or ".csv")))


def cmd_evaluate(args: argparse.Namespace) -> int:
    model = load_model(args.model)
    X, y, names = read_feature_csv(args.features)
    if list(model.feature_names_in_) != list(names):
        raise ModelDatasetMismatch(
            f"model was trained on {len(model.feature_names_in_)} features "
            f"{model.feature_names_in_[:3]}..., file has {len(names)} {names[:3]}..."
        )
    roles = _read_manifest(args.manifest)
    test_rows = roles["test"]
    if not test_rows:
        raise ModelDatasetMismatch("manifest has no test rows")
    if max(test_rows) >= X.shape[0]:
        raise ModelDatasetMismatch(
            f"manifest row {max(test_rows)} out of range for {X.shape[0]} data rows"
        )
    idx = np.array(test_rows, dtype=np.intp)
    report = evaluate_probs(y[idx], model.predict_proba(X[idx]), model.classes_)

    def fmt(v: float) -> str:
        return format(v, ".17g")

    with open(args.report_out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["accuracy", "log_loss"])
        writer.writerow([fmt(report.accuracy), fmt(report.log_loss)])
        writer.writerow(["true", "pred", "prob"])
        for true, pred, prob in report.rows:
            writer.writerow([true, pred, fmt(prob)])
    mislabeled_out = args.mislabeled_out or _derived_path(args.report_out, "mislabeled")
    with open(mislabeled_out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["true", "pred", "prob"])
        for true, pred, prob in report.mislabeled:
            writer.writerow([true, pred, fmt(prob)])
    confusion_out = args.confusion_out or _derived_path(args.report_out, "confusion")
    labels = sorted({r[0] for r in report.rows} | {r[1] for r in report.rows})
    counts = {(t, p): 0 for t in labels for p in labels}
    for true, pred, _ in report.rows:
        counts[(true, pred)] += 1
    with open(confusion_out, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["true"] + [str(p) for p in labels])
        for t in labels:
            writer.writerow([t] + [counts[(t, p)] for p in labels])
    print(
        f"accuracy {report.accuracy:.4f}, log loss {report.log_loss:.4f} "
        f"on {len(report.rows)} test rows; report -> {args.report_out}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ntzeros",
        description="Classical number-theory task oracle and zero-ordinate classification pipeline.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    usage_lines = "\n".join("  " + spec.usage for _, spec in sorted(ORACLE_TABLE.items()))
    p_oracle = sub.add_parser(
        "oracle",
        help="answer one catalogued computation by task index",
        description="Answer one catalogued computation. Parameter conventions:\n" + usage_lines,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p_oracle.add_argument("index", type=int, help="task index (see below)")
    p_oracle.add_argument("args", type=int, nargs="*", help="integer parameters for the task")
    p_oracle.set_defaults(fn=cmd_oracle)

    p_feat = sub.add_parser("features", help="turn a zeros CSV into a feature CSV")
    p_feat.add_argument("input", help="zeros CSV with header label,gamma_1,...,gamma_25")
    p_feat.add_argument("output", help="feature CSV to write")
    group = p_feat.add_mutually_exclusive_group()
    group.add_argument("--engineered", action="store_true", default=True,
                       help="write the 40 summary features (default)")
    group.add_argument("--raw", action="store_true",
                       help="write the (normalized) 25 ordinates instead")
    p_feat.add_argument("--normalization", choices=["raw", "centered", "zscore"], default="raw",
                        help="per-row normalization applied before featurization")
    p_feat.set_defaults(fn=cmd_features)

    p_train = sub.add_parser("train", help="split a feature CSV and train a classifier")
    p_train.add_argument("features", help="feature CSV from the features subcommand")
    p_train.add_argument("model_out", help="path for the persisted model")
    p_train.add_argument("--model", choices=["forest", "gbdt"], default="forest")
    p_train.add_argument("--trees", type=int, default=200, help="forest size (default 200)")
    p_train.add_argument("--max-depth", type=int, default=None, help="forest depth cap")
    p_train.add_argument("--rounds", type=int, default=1500, help="gbdt boosting rounds (default 1500)")
    p_train.add_argument("--leaves", type=int, default=127, help="gbdt leaf cap per tree (default 127)")
    p_train.add_argument("--early-stop", type=int, default=75,
                         help="gbdt early-stopping patience; 0 disables (default 75)")
    p_train.add_argument("--learning-rate", type=float, default=0.1, help="gbdt shrinkage (default 0.1)")
    p_train.add_argument("--seed", type=int, default=0, help="seed for the split and the model")
    p_train.add_argument("--val-fraction", type=float, default=0.2,
                         help="per-class share of non-test rows held for validation (default 0.2)")
    p_train.add_argument("--test-quota-small", type=int, default=1,
                         help="test rows per class with label <= small-q-cut (default 1)")
    p_train.add_argument("--test-quota-large", type=int, default=2,
                         help="test rows per class above small-q-cut (default 2)")
    p_train.add_argument("--small-q-cut", type=int, default=100,
                         help="label threshold between the two quotas (default 100)")
    p_train.add_argument("--q-max", type=int, default=200,
                         help="drop classes with label beyond this (default 200)")
    p_train.add_argument("--manifest-out", default=None,
                         help="split manifest path (default: MODEL_OUT.split.csv)")
    p_train.set_defaults(fn=cmd_train)

    p_eval = sub.add_parser("evaluate", help="score a model on the manifest's test rows")
    p_eval.add_argument("model", help="model file from the train subcommand")
    p_eval.add_argument("features", help="feature CSV the model was trained from")
    p_eval.add_argument("manifest", help="split manifest from the train subcommand")
    p_eval.add_argument("report_out", help="report CSV to write")
    p_eval.add_argument("--mislabeled-out", default=None,
                        help="mislabeled-rows CSV (default: derived from REPORT_OUT)")
    p_eval.add_argument("--confusion-out", default=None,
                        help="confusion-matrix CSV (default: derived from REPORT_OUT)")
    p_eval.set_defaults(fn=cmd_evaluate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        # covers the arithmetic, format, split, and model-mismatch errors
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
