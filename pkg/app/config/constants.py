# Define all app-wide constants here

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1  # validation or assertion failure
EXIT_USAGE = 2  # usage or parse error

# Field descriptors
RATIONAL_FIELD = "Q"
PRIME_FIELD_PREFIX = "Fp:"

# Word language
LAYER_SEPARATOR = ";"
GENERATOR_SEPARATOR = ","

# Report markers
PASS = "PASS"
FAIL = "FAIL"

# Shipped example algebras (under algebras/)
EXAMPLES_DIR = "algebras"
EXAMPLE_FILES = ("s2.alg", "n2.alg", "qx4.alg", "qxy.alg", "sum13.alg")

# Standard words used by sumcheck when no --word is given
SUMCHECK_WORDS = (
    "id",
    "comul ; mul",
    "cup ; cap",
    "cup ; comul ; mul ; cap",
    "cup ; comul ; mul ; comul ; mul ; cap",
    "cup ; comul ; mul ; comul ; mul ; comul ; mul ; cap",
)
