INVALID_ROOT_SYSTEM = "Unsupported root system type {type_tag}{rank}"
ROOT_TABLE_MISMATCH = "Root table {path} does not match the closure of the simple roots"
INDEX_OUT_OF_RANGE = "Root index {index} outside 1..{n}"
NOT_A_PATTERN = "Root set {roots} is not a pattern group"
NOT_A_SUBSET = "Normal set {roots} is not contained in the pattern"
UNKNOWN_MODULUS = "No irreducible modulus recorded for f={f}"
REDUCIBLE_MODULUS = "Modulus {modulus:b} is reducible over GF(2)"
ZERO_POLYNOMIAL = "Root counting is undefined for the zero polynomial"
DEGREE_TOO_LARGE = "Polynomial degree {degree} exceeds the supported maximum {limit}"
CHAR_TWO_ONLY = "Numeric collection is implemented for characteristic 2 only, got p={p}"
REDUCTION_INCONSISTENT = "Reduction step failed its recheck: {detail}"
UNSUPPORTED_SHAPE = "Core graph component {component} is neither a linear tree nor circles with attached linear trees"
ODD_CIRCLE = "Core graph component {component} is not 2-colourable"
TERM_ESCAPES_CENTER = "Commutator of roots {j} and {i} has a term at {target} outside Z"
EXPONENT_UNSUPPORTED = "Commutator exponent {exponent} is outside {{1, 2}}"
STABILIZER_MISMATCH = "Stabilizer sizes |X'|={x} and |Y'|={y} violate the expected ratio q^{expected}"
PAIRING_INCONSISTENT = "Commutator pairing on X' is inconsistent: {detail}"
HEART_UNSUPPORTED = "Core {form} has a nonempty heart and no closed form"
UNKNOWN_BRANCHING = "No catalog family matches core {form} (histogram {histogram})"
CORE_NOT_FOUND = "Core {core_id} not found for {type_tag}{rank} at p={p}"
BUDGET_EXCEEDED = "Group of order 2^{log2} exceeds the oracle budget 2^{budget}"
CENSUS_OUT_OF_SCOPE = "Census for {type_tag}{rank} at p={p} is out of scope"
Q_OUT_OF_SCOPE = "q={q} is not a supported power of two (maximum {limit})"
MALLE_MISSING = "No characters of degree q^4/8 in the census"
CACHE_UNAVAILABLE = "Result cache unavailable, computing directly"
