# модуль F_p должен помещаться в машинное слово
MAX_MODULUS = 2**31

RATIONALS_NAME = "q"
PRIME_FIELD_PREFIX = "f"

VARIABLE_PREFIX = "x"

DEFAULT_ORDER = "grevlex"
