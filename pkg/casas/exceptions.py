class InvalidIndicesError(ValueError):
    def __init__(self, indices, length: int, low: int, high: int):
        error = (
            f"Некорректный набор индексов {tuple(indices)}: ожидается {length} чисел из [{low}, {high}]"
        )
        super().__init__(error)


class UnreducedIndicesError(ValueError):
    def __init__(self, indices, n: int):
        error = (
            f"Набор индексов {tuple(indices)} содержит j = {n}. "
            "Сначала приведите его при помощи reduce_indices()"
        )
        super().__init__(error)


class NotMonicError(ValueError):
    def __init__(self, poly):
        error = f"Многочлен `{poly}` не унитарный"
        super().__init__(error)


class DegreeOutOfRangeError(ValueError):
    def __init__(self, name: str, value: int, low: int):
        error = f"Степень {name}={value} вне допустимого диапазона (ожидается не меньше {low})"
        super().__init__(error)


class SearchSpaceTooLargeError(ValueError):
    def __init__(self, size: int, limit: int):
        error = f"Перебор {size} многочленов превышает лимит {limit}"
        super().__init__(error)


class InfiniteFieldError(ValueError):
    def __init__(self, field):
        error = f"Перебор многочленов над бесконечным полем {field} невозможен"
        super().__init__(error)


class InvalidFilterError(ValueError):
    def __init__(self, key: str):
        error = f"Некорректный фильтр `{key}`. Ожидается `j<номер>` или `j<номер>__<lookup>`"
        super().__init__(error)
