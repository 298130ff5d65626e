"""Number-theory desk algorithms and an L-function zero classification pipeline.

The arithmetic half (`arith`, `diophantine`, `modular`, `primes`, `curves`)
is a catalogue of classical algorithms on plain integers. The learning half
(`features`, `tree`, `forest`, `gbdt`, `metrics`, `split`, `persist`) turns
labeled zero-ordinate sequences into engineered features and fits from-
scratch tree ensembles to recover the modulus label. `cli` binds both behind
the `ntzeros` command.
"""

from .arith import (
    CongruenceSolution,
    ExtGcdResult,
    crt,
    ext_gcd,
    gcd_binary,
    gcd_euclid,
    mod_inverse,
    pow_mod,
    solve_linear_congruence,
)
from .curves import (
    CurveParams,
    ECPoint,
    RsaKey,
    ec_add,
    ec_double,
    ec_scalar_mul,
    rsa_keygen_from_primes,
    rsa_keygen_random,
)
from .diophantine import (
    CFExpansion,
    Convergent,
    PellSolution,
    TwoSquares,
    cf_expand_sqrt,
    convergents,
    egyptian_greedy,
    pell_fundamental,
    rational_roots,
    two_squares_decompose,
    zeckendorf,
)
from .features import (
    Dataset,
    ZeroFeatureExtractor,
    ZeroRecord,
    build_dataset,
    extract_features,
    feature_names,
    normalize_vector,
    parse_zero_csv,
)
from .forest import ForestClassifier, balanced_class_weights
from .gbdt import GbdtClassifier, logloss_gradient, softmax
from .metrics import EvalReport, accuracy, evaluate_probs, log_loss_from_proba
from .modular import (
    PolyInt,
    discrete_log_bsgs,
    discrete_log_naive,
    hensel_lift,
    primitive_root,
    sqrt_mod,
)
from .persist import ModelDatasetMismatch, load_model, save_model
from .primes import (
    IdealDecomposition,
    IdealKind,
    PrimalityVerdict,
    Verdict,
    carmichael,
    decompose_prime_ideal,
    euler_criterion_test,
    fermat_factor,
    fermat_test,
    fermat_test_random,
    is_prime_trial,
    lucas_lehmer,
    sieve_eratosthenes,
    totient_sieve,
)
from .split import InsufficientClassSamples, SplitResult, split_by_label_quota
from .tree import TreeNode, fit_classification_tree, fit_regression_tree

__version__ = "0.1.0"
