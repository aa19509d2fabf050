import pytest

from ladinomt import TranslationEngine, default_engine
from ladinomt.lexicon import default_lexicon, default_phrase_rules
from ladinomt.morphogen import default_table
from ladinomt.orthography import default_rules

# the five published input/output pairs the shipped rule data must reproduce
GOLDEN_PAIRS = [
    ("Me gusta leer.", "Me plaze meldar."),
    ("¿No has leido el libro?", "No meldates el livro?"),
    ("Bebo café turco después del almuerzo.", "Bevo kafe turko despues del komida de midi."),
    ("Tengo dos niños; una hija y un hijo.", "Tengo dos kriaturas; una ija i un ijo."),
    ("Tengo que cocinar para mañana.", "Devo de gizar para amanyana."),
]


@pytest.fixture(scope="session")
def engine() -> TranslationEngine:
    return default_engine()


@pytest.fixture(scope="session")
def mini_lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def phrase_rules():
    return default_phrase_rules()


@pytest.fixture(scope="session")
def ortho_rules():
    return default_rules()


@pytest.fixture(scope="session")
def conjugation_table():
    return default_table()


@pytest.fixture(scope="session")
def golden_pairs():
    return list(GOLDEN_PAIRS)
