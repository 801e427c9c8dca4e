"""
pytest configuration and shared fixtures.
"""
import sys
import pytest
from pathlib import Path
import tempfile
import shutil

# Add src to Python path
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))

FIXTURE_FILE = Path(__file__).parent.parent / "data" / "curves_fixture.txt"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_path = Path(tempfile.mkdtemp())
    yield temp_path
    # Cleanup
    if temp_path.exists():
        shutil.rmtree(temp_path)


@pytest.fixture
def fixture_records():
    """The bundled curve fixture."""
    from curve_db import ingest_db
    return ingest_db(FIXTURE_FILE)


@pytest.fixture
def curve_50a2():
    """y^2 + xy + y = x^3 - 126x - 552, trivial torsion over Q."""
    from curve import EllipticCurve
    return EllipticCurve((1, 0, 1, -126, -552))


@pytest.fixture
def curve_90c4():
    """y^2 + xy + y = x^3 - x^2 - 2597x - 50281, torsion C2 over Q."""
    from curve import EllipticCurve
    return EllipticCurve((1, -1, 1, -2597, -50281))


@pytest.fixture
def curve_y2_x3_1():
    """y^2 = x^3 + 1, torsion C6 over Q."""
    from curve import EllipticCurve
    return EllipticCurve((0, 0, 0, 0, 1))


@pytest.fixture
def write_curve_file(temp_dir):
    """Factory fixture writing allcurves lines to a file."""
    def _write(lines, filename="curves.txt"):
        path = temp_dir / filename
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    return _write
