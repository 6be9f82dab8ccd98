from config import Settings
from executors import map_tasks


def test_settings_defaults(monkeypatch):
    for name in ("CA_FIELD", "CA_WORKERS", "CA_SCAN__PRIME_BOUND", "CA_KOSZUL__DEGREE_BOUND"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings()
    assert settings.field == "q"
    assert settings.workers >= 1
    assert settings.scan.prime_bound == 10
    assert settings.koszul.degree_bound is None


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("CA_FIELD", "f7")
    monkeypatch.setenv("CA_WORKERS", "3")
    monkeypatch.setenv("CA_SCAN__PRIME_BOUND", "20")
    monkeypatch.setenv("CA_KOSZUL__DEGREE_BOUND", "4")
    settings = Settings()
    assert (settings.field, settings.workers) == ("f7", 3)
    assert settings.scan.prime_bound == 20
    assert settings.scan.brute_force_limit == 10**7
    assert settings.koszul.degree_bound == 4


def test_map_tasks_preserves_order():
    items = [-3, 1, -2, 5, -8]
    assert map_tasks(abs, items) == [3, 1, 2, 5, 8]
    assert map_tasks(abs, items, workers=2) == [3, 1, 2, 5, 8]
    assert map_tasks(abs, [], workers=4) == []
