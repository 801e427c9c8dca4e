"""
Tests for config module.
"""
import sys
from pathlib import Path

# Add src to Python path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

import config


def test_base_directories_exist():
    """Test that base directories are defined."""
    assert isinstance(config.BASE_DIR, Path)
    assert isinstance(config.DATA_DIR, Path)
    assert isinstance(config.RESULTS_DIR, Path)


def test_directory_hierarchy():
    """Test that directory hierarchy is correct."""
    assert config.DATA_DIR.parent == config.BASE_DIR
    assert config.RESULTS_DIR.parent == config.BASE_DIR
    assert config.SCAN_RESULTS_FILE.parent == config.RESULTS_DIR
    assert config.SCAN_RESULTS_FILE.suffix == '.json'


def test_fixture_file_is_bundled():
    """Test that the default curve fixture ships with the repository."""
    assert config.FIXTURE_FILE.exists()


def test_log_configuration():
    """Test that logging is properly configured."""
    assert config.LOG_FILE.parent == config.LOG_DIR
    assert config.LOG_LEVEL in ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']
    assert config.LOG_FORMAT is not None


def test_numeric_settings():
    """Test that numeric parameters have usable values."""
    assert config.FACTOR_START_PRIME >= 3
    assert config.NUMERIC_ROOT_DPS >= 30
    assert config.HALVING_MAX_DEGREE == 4
    assert config.EXHAUSTIVE_MAX_ORDER == 24
    assert config.DEFAULT_JOBS >= 1
    assert isinstance(config.SKIP_SCANNED_CURVES, bool)


def test_ensure_directories(temp_dir, monkeypatch):
    """Test that ensure_directories creates all required directories."""
    monkeypatch.setattr(config, 'DATA_DIR', temp_dir / 'data')
    monkeypatch.setattr(config, 'RESULTS_DIR', temp_dir / 'results')
    monkeypatch.setattr(config, 'LOG_DIR', temp_dir / 'logs')

    config.ensure_directories()

    assert (temp_dir / 'data').exists()
    assert (temp_dir / 'results').exists()
    assert (temp_dir / 'logs').exists()


def test_ensure_directories_idempotent(temp_dir, monkeypatch):
    """Test that calling ensure_directories twice does not fail."""
    monkeypatch.setattr(config, 'DATA_DIR', temp_dir / 'data')
    monkeypatch.setattr(config, 'RESULTS_DIR', temp_dir / 'results')
    monkeypatch.setattr(config, 'LOG_DIR', temp_dir / 'logs')

    config.ensure_directories()
    config.ensure_directories()

    assert (temp_dir / 'logs').is_dir()
