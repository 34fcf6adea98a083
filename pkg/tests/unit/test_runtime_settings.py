from cnspa.config.runtime import DEFAULT_BRUTE_FORCE_LIMIT, RuntimeSettings


def test_defaults_without_environment(monkeypatch):
    for name in ("CNSPA_WORKERS", "CNSPA_MAX_DROP_ATTEMPTS", "CNSPA_BRUTE_FORCE_LIMIT", "CNSPA_PROGRESS"):
        monkeypatch.delenv(name, raising=False)
    settings = RuntimeSettings.from_env()
    assert settings.workers == 1
    assert settings.brute_force_limit == DEFAULT_BRUTE_FORCE_LIMIT
    assert settings.show_progress is True


def test_environment_values_are_parsed(monkeypatch):
    monkeypatch.setenv("CNSPA_WORKERS", "8")
    monkeypatch.setenv("CNSPA_PROGRESS", "false")
    settings = RuntimeSettings.from_env()
    assert settings.workers == 8
    assert settings.show_progress is False


def test_out_of_range_values_fall_back(monkeypatch):
    monkeypatch.setenv("CNSPA_WORKERS", "1000")
    monkeypatch.setenv("CNSPA_BRUTE_FORCE_LIMIT", "20")
    monkeypatch.setenv("CNSPA_MAX_DROP_ATTEMPTS", "many")
    settings = RuntimeSettings.from_env()
    assert settings.workers == 1
    assert settings.brute_force_limit == DEFAULT_BRUTE_FORCE_LIMIT
    assert settings.max_drop_attempts == 1000


def test_flag_words_are_case_insensitive(monkeypatch):
    monkeypatch.setenv("CNSPA_PROGRESS", " Off ")
    assert RuntimeSettings.from_env().show_progress is False
    monkeypatch.setenv("CNSPA_PROGRESS", "maybe")
    assert RuntimeSettings.from_env().show_progress is True
