from pathlib import Path

import pytest

from scriptgauge.lexicons import load_categories, load_intensity, load_vad

DATA_DIR = Path(__file__).parent / "data"

SAMPLE_SCRIPT = """\
INT. HOUSE - DAY

John walks into the room and looks around.

JOHN
Hello there, this feels like a happy glad morning to me.

MARY
I am scared of the dark cellar, full of dread and gloom tonight.

EXT. GARDEN - NIGHT

Mary follows him outside.

JOHN (V.O.)
Stay calm and glad, stay happy.
"""


@pytest.fixture(scope="session")
def vad_lexicon():
    return load_vad(DATA_DIR / "vad.tsv")


@pytest.fixture(scope="session")
def intensity_lexicon():
    return load_intensity(DATA_DIR / "intensity.tsv")


@pytest.fixture(scope="session")
def category_lexicon():
    return load_categories(DATA_DIR / "categories.txt")


@pytest.fixture
def sample_screenplay():
    from scriptgauge.parsing import parse_screenplay

    return parse_screenplay(SAMPLE_SCRIPT, "sample")
