"""Versioned text serialization for trained models.

The format is line-oriented and self-describing: a tag line, `param` lines,
the class list, the feature-name list, then each tree in preorder with
`S <feature> <threshold>` split lines and `L <value...>` leaf lines. Floats
are written as C99 hex literals, so a load reproduces predictions bit for
bit and repeated saves of one model are byte-identical.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator

import numpy as np

from .forest import ForestClassifier
from .gbdt import GbdtClassifier
from .tree import TreeNode

FORMAT_TAG = "ntzeros-model"
FORMAT_VERSION = 1


class ModelDatasetMismatch(ValueError):
    """Model metadata does not match the dataset it is being applied to."""


def _fhex(v: float) -> str:
    return float(v).hex()


def _dump_tree(node: TreeNode, lines: list[str]) -> None:
    if node.is_leaf:
        if isinstance(node.value, np.ndarray):
            lines.append("L " + " ".join(_fhex(v) for v in node.value))
        else:
            lines.append("L " + _fhex(node.value))
    else:
        lines.append(f"S {node.feature} {_fhex(node.threshold)}")
        _dump_tree(node.left, lines)
        _dump_tree(node.right, lines)


def _parse_tree(lines: Iterator[str], leaf_width: int) -> TreeNode:
    line = next(lines)
    kind, rest = line.split(" ", 1)
    if kind == "L":
        vals = [float.fromhex(tok) for tok in rest.split()]
        if len(vals) != leaf_width:
            raise ValueError(f"leaf has {len(vals)} values, expected {leaf_width}")
        value = np.array(vals) if leaf_width > 1 else vals[0]
        return TreeNode(value=value)
    if kind != "S":
        raise ValueError(f"unexpected tree line {line!r}")
    feature_tok, thr_tok = rest.split()
    node = TreeNode(feature=int(feature_tok), threshold=float.fromhex(thr_tok))
    node.left = _parse_tree(lines, leaf_width)
    node.right = _parse_tree(lines, leaf_width)
    return node


def _opt(value) -> str:
    return "none" if value is None else str(value)


def dump_model(model) -> str:
    """Serialize a fitted ForestClassifier or GbdtClassifier to text."""
    if not hasattr(model, "classes_"):
        raise ValueError("cannot serialize an unfitted model")
    lines = [f"{FORMAT_TAG} {FORMAT_VERSION}"]
    names = list(getattr(model, "feature_names_in_", []))
    if any(" " in n or "\n" in n for n in names):
        raise ValueError("feature names must not contain whitespace")
    if isinstance(model, ForestClassifier):
        lines.append("kind forest")
        lines.append(f"param n_trees {model.n_trees}")
        lines.append(f"param max_depth {_opt(model.max_depth)}")
        lines.append(f"param min_samples_leaf {model.min_samples_leaf}")
        lines.append(f"param max_features {_opt(model.max_features)}")
        lines.append(f"param bootstrap {str(model.bootstrap).lower()}")
        lines.append(f"param class_weight {_opt(model.class_weight)}")
        lines.append(f"param seed {model.seed}")
        lines.append("classes " + " ".join(str(int(c)) for c in model.classes_))
        lines.append("features " + " ".join(names))
        for i, tree in enumerate(model.trees_):
            lines.append(f"tree {i}")
            _dump_tree(tree, lines)
    elif isinstance(model, GbdtClassifier):
        lines.append("kind gbdt")
        lines.append(f"param n_rounds {model.n_rounds}")
        lines.append(f"param learning_rate {_fhex(model.learning_rate)}")
        lines.append(f"param max_leaves {model.max_leaves}")
        lines.append(f"param min_samples_leaf {model.min_samples_leaf}")
        lines.append(f"param early_stopping_rounds {_opt(model.early_stopping_rounds)}")
        lines.append(f"param seed {model.seed}")
        lines.append(f"best_iteration {model.best_iteration_}")
        lines.append("init_scores " + " ".join(_fhex(v) for v in model.init_scores_))
        lines.append("classes " + " ".join(str(int(c)) for c in model.classes_))
        lines.append("features " + " ".join(names))
        for r, round_trees in enumerate(model.rounds_):
            for c, tree in enumerate(round_trees):
                lines.append(f"tree {r} {c}")
                _dump_tree(tree, lines)
    else:
        raise TypeError(f"cannot serialize {type(model).__name__}")
    return "\n".join(lines) + "\n"


def save_model(model, path: str | Path) -> None:
    Path(path).write_text(dump_model(model))


def load_model(path: str | Path):
    """Reconstruct a fitted classifier from a file written by save_model."""
    text = Path(path).read_text()
    lines = iter(text.splitlines())
    head = next(lines, "")
    parts = head.split()
    if len(parts) != 2 or parts[0] != FORMAT_TAG:
        raise ValueError(f"not a {FORMAT_TAG} file: first line {head!r}")
    if int(parts[1]) != FORMAT_VERSION:
        raise ValueError(f"unsupported format version {parts[1]}")
    kind_line = next(lines)
    kind = kind_line.split()[1]
    params: dict[str, str] = {}
    meta: dict[str, str] = {}
    line = next(lines)
    while not line.startswith("features "):
        key, _, rest = line.partition(" ")
        if key == "param":
            name, _, value = rest.partition(" ")
            params[name] = value
        else:
            meta[key] = rest
        line = next(lines)
    names = line.split()[1:]
    classes = np.array([int(t) for t in meta["classes"].split()], dtype=np.int64)

    def opt_int(token: str) -> int | None:
        return None if token == "none" else int(token)

    if kind == "forest":
        max_features: int | str | None
        tok = params["max_features"]
        max_features = tok if tok == "sqrt" else opt_int(tok)
        model = ForestClassifier(
            n_trees=int(params["n_trees"]),
            max_depth=opt_int(params["max_depth"]),
            min_samples_leaf=int(params["min_samples_leaf"]),
            max_features=max_features,
            bootstrap=params["bootstrap"] == "true",
            class_weight=None if params["class_weight"] == "none" else params["class_weight"],
            seed=int(params["seed"]),
        )
        model.classes_ = classes
        model.n_features_in_ = len(names)
        model.feature_names_in_ = names
        trees = []
        for _ in range(model.n_trees):
            header = next(lines)
            if not header.startswith("tree "):
                raise ValueError(f"expected tree header, got {header!r}")
            trees.append(_parse_tree(lines, classes.size))
        model.trees_ = trees
        return model
    if kind == "gbdt":
        model = GbdtClassifier(
            n_rounds=int(params["n_rounds"]),
            learning_rate=float.fromhex(params["learning_rate"]),
            max_leaves=int(params["max_leaves"]),
            min_samples_leaf=int(params["min_samples_leaf"]),
            early_stopping_rounds=opt_int(params["early_stopping_rounds"]),
            seed=int(params["seed"]),
        )
        model.classes_ = classes
        model.n_features_in_ = len(names)
        model.feature_names_in_ = names
        model.best_iteration_ = int(meta["best_iteration"])
        model.init_scores_ = np.array([float.fromhex(t) for t in meta["init_scores"].split()])
        rounds = []
        for _ in range(model.best_iteration_):
            round_trees = []
            for _ in range(classes.size):
                header = next(lines)
                if not header.startswith("tree "):
                    raise ValueError(f"expected tree header, got {header!r}")
                round_trees.append(_parse_tree(lines, 1))
            rounds.append(round_trees)
        model.rounds_ = rounds
        return model
    raise ValueError(f"unknown model kind {kind!r}")
