LOOKUP_SEP = "__"

INDEX_PREFIX = "j"
