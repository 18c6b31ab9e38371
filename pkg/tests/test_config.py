from cli.config import CLIConfig
from config.loader import ReferenceTablesConfig, reference_tables


def test_reference_tables_singleton():
    assert ReferenceTablesConfig() is reference_tables


def test_reference_tables_sections():
    assert len(reference_tables.catalog_rows["platonic"]) == 5
    assert len(reference_tables.catalog_rows["archimedean"]) == 13
    assert reference_tables.realization_recipes["snub cube"] == "snub(cube)"
    assert reference_tables.verification_defaults["diff_min_p"] == 12


def test_cli_config_from_environment(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("LOG_FORMAT", "json")
    config = CLIConfig()
    assert config.log_level == "DEBUG"
    assert config.log_format == "json"
