class FieldDivisionByZeroError(ArithmeticError):
    def __init__(self, field):
        error = f"Деление на ноль в поле {field}"
        super().__init__(error)


class NotPrimeModulusError(ValueError):
    def __init__(self, modulus: int):
        error = f"Модуль {modulus} не является простым числом"
        super().__init__(error)


class ModulusTooLargeError(ValueError):
    def __init__(self, modulus: int, limit: int):
        error = f"Модуль {modulus} не помещается в машинное слово (допустимо меньше {limit})"
        super().__init__(error)


class UnknownFieldError(ValueError):
    def __init__(self, name: str):
        error = f"Неизвестное поле `{name}`. Ожидается `q` или `f<p>`, напр., `f7`"
        super().__init__(error)


class ElementParseError(ValueError):
    def __init__(self, text: str, field):
        error = f"Невозможно разобрать `{text}` как элемент поля {field}"
        super().__init__(error)


class RingMismatchError(ValueError):
    def __init__(self, left, right):
        error = f"Многочлены из разных колец: {left} и {right}"
        super().__init__(error)


class PolynomialParseError(ValueError):
    def __init__(self, text: str, reason: str, position: int | None = None):
        self.text = text
        self.reason = reason
        self.position = position
        where = f" (позиция {position})" if position is not None else ""
        error = f"Некорректный многочлен `{text}`{where}: {reason}"
        super().__init__(error)


class IndexOutOfRangeError(ValueError):
    def __init__(self, name: str, value: int, low: int, high: int):
        error = f"Индекс {name}={value} вне диапазона [{low}, {high}]"
        super().__init__(error)


class NotHomogeneousError(ValueError):
    def __init__(self, poly):
        error = f"Многочлен `{poly}` не однороден (или имеет нулевую степень)"
        super().__init__(error)


class ZeroPolynomialError(ValueError):
    def __init__(self, operation: str):
        error = f"Операция `{operation}` не определена для нулевого многочлена"
        super().__init__(error)


class InexactDivisionError(ArithmeticError):
    def __init__(self, dividend, divisor):
        error = f"`{divisor}` не делит `{dividend}` нацело"
        super().__init__(error)
