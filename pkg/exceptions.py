class ConfigurationError(ValueError):
    def __init__(self, option: str, value, reason: str):
        error = f"Некорректное значение параметра `{option}`={value!r}: {reason}"
        super().__init__(error)
