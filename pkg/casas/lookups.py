import operator

lookups = {
    "exact": operator.eq,
    "eq": operator.eq,
    "ne": operator.ne,
    "gt": operator.gt,
    "ge": operator.ge,
    "lt": operator.lt,
    "le": operator.le,
    "in": lambda c, v: c in v,
    "notin": lambda c, v: c not in v,
    "between": lambda c, v: v[0] <= c <= v[1],
}
