import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ladinomt.analysis import (
    AnalyzedToken,
    Number,
    Person,
    Pos,
    Tense,
    VerbFeatures,
    analyze,
    detect_present_perfect,
    is_punct,
    tokenize,
)
from tests.conftest import GOLDEN_PAIRS


# --- tokenize ------------------------------------------------------------------

TOKENIZE_CASES = [
    ("Me gusta leer.", ["Me", "gusta", "leer", "."]),
    ("", []),
    ("¿No has leido el libro?", ["¿", "No", "has", "leido", "el", "libro", "?"]),
    ("Tengo dos niños; una hija y un hijo.",
     ["Tengo", "dos", "niños", ";", "una", "hija", "y", "un", "hijo", "."]),
    ("«Hola», dijo.", ["«", "Hola", "»", ",", "dijo", "."]),
    ("3,5 euros", ["3,5", "euros"]),
    ("bien-estar", ["bien-estar"]),
    ("  espacios   dobles  ", ["espacios", "dobles"]),
]


@pytest.mark.parametrize("text,expected", TOKENIZE_CASES)
def test_tokenize(text, expected):
    assert tokenize(text) == expected


def test_tokenize_no_whitespace_in_tokens():
    for text, _ in GOLDEN_PAIRS:
        for token in tokenize(text):
            assert token
            assert not any(ch.isspace() for ch in token)


@given(st.text(max_size=80))
@settings(max_examples=300)
def test_tokenize_join_roundtrip(text):
    tokens = tokenize(text)
    assert tokenize(" ".join(tokens)) == tokens


def test_tokenize_deterministic():
    text = GOLDEN_PAIRS[2][0]
    assert tokenize(text) == tokenize(text)


# --- analyze ---------------------------------------------------------------------

def _features(tok: AnalyzedToken):
    f = tok.features
    if f is None:
        return None
    return (f.tense, f.person, f.number)


def test_analyze_verb_with_features(mini_lexicon):
    (tok,) = analyze(["gusta"], mini_lexicon)
    assert tok.pos is Pos.VERB
    assert tok.lemma == "gustar"
    assert _features(tok) == (Tense.PRESENT, Person.P3, Number.SG)


def test_analyze_punct_identity(mini_lexicon):
    (tok,) = analyze(["."], mini_lexicon)
    assert tok.pos is Pos.PUNCT
    assert tok.lemma == "."


def test_analyze_noun_fallback(mini_lexicon):
    (tok,) = analyze(["libro"], mini_lexicon)
    assert tok.pos is Pos.NOUN
    assert tok.lemma == "libro"


# hand-built analysis table for every token of the golden sentences
HAND_ANALYSES = {
    "me": (Pos.PRON, "me", None),
    "gusta": (Pos.VERB, "gustar", (Tense.PRESENT, Person.P3, Number.SG)),
    "leer": (Pos.VERB, "leer", (Tense.INFINITIVE, None, None)),
    ".": (Pos.PUNCT, ".", None),
    "¿": (Pos.PUNCT, "¿", None),
    "no": (Pos.ADV, "no", None),
    "has": (Pos.VERB, "haber", (Tense.PRESENT, Person.P2, Number.SG)),
    "leido": (Pos.VERB, "leer", (Tense.PARTICIPLE, None, None)),
    "el": (Pos.DET, "el", None),
    "libro": (Pos.NOUN, "libro", None),
    "?": (Pos.PUNCT, "?", None),
    "bebo": (Pos.VERB, "beber", (Tense.PRESENT, Person.P1, Number.SG)),
    "café": (Pos.NOUN, "café", None),
    "turco": (Pos.NOUN, "turco", None),
    "después": (Pos.ADV, "después", None),
    "del": (Pos.ADP, "del", None),
    "almuerzo": (Pos.NOUN, "almuerzo", None),
    "tengo": (Pos.VERB, "tener", (Tense.PRESENT, Person.P1, Number.SG)),
    "dos": (Pos.NUM, "dos", None),
    "niños": (Pos.NOUN, "niño", None),
    ";": (Pos.PUNCT, ";", None),
    "una": (Pos.DET, "una", None),
    "hija": (Pos.NOUN, "hija", None),
    "y": (Pos.CONJ, "y", None),
    "un": (Pos.DET, "un", None),
    "hijo": (Pos.NOUN, "hijo", None),
    "que": (Pos.CONJ, "que", None),
    "cocinar": (Pos.VERB, "cocinar", (Tense.INFINITIVE, None, None)),
    "para": (Pos.ADP, "para", None),
    "mañana": (Pos.NOUN, "mañana", None),
}


def test_golden_sentences_match_hand_analysis(mini_lexicon):
    for text, _ in GOLDEN_PAIRS:
        tokens = tokenize(text)
        analyzed = analyze(tokens, mini_lexicon)
        assert len(analyzed) == len(tokens)
        for tok in analyzed:
            pos, lemma, features = HAND_ANALYSES[tok.normalized]
            assert tok.pos is pos, f"{tok.surface}: {tok.pos} != {pos}"
            assert tok.lemma == lemma
            assert _features(tok) == features


def test_verb_set_matches_hand_oracle(mini_lexicon):
    oracle_verbs = {k for k, (pos, _, _) in HAND_ANALYSES.items() if pos is Pos.VERB}
    for text, _ in GOLDEN_PAIRS:
        analyzed = analyze(tokenize(text), mini_lexicon)
        tagged = {t.normalized for t in analyzed if t.pos is Pos.VERB}
        expected = {t.normalized for t in analyzed if t.normalized in oracle_verbs}
        assert tagged == expected


def test_analyze_preserves_token_count(mini_lexicon):
    tokens = tokenize("Palabras raras zxqwy 42 ; !")
    assert len(analyze(tokens, mini_lexicon)) == len(tokens)


def test_analyze_accented_preterite(mini_lexicon):
    (tok,) = analyze(["cantó"], mini_lexicon)
    assert tok.pos is Pos.VERB
    assert tok.lemma == "cantar"
    assert _features(tok) == (Tense.PRETERITE, Person.P3, Number.SG)
    # without the accent this is a noun ("canto"): the accent carries tense
    (tok,) = analyze(["canto"], mini_lexicon)
    assert _features(tok) == (Tense.PRESENT, Person.P1, Number.SG)


def test_analyze_future(mini_lexicon):
    (tok,) = analyze(["comerá"], mini_lexicon)
    assert tok.pos is Pos.VERB
    assert tok.lemma == "comer"
    assert _features(tok) == (Tense.FUTURE, Person.P3, Number.SG)


def test_analyze_unknown_infinitive_is_noun(mini_lexicon):
    # "lunar" ends in -ar but is no known verb lemma
    (tok,) = analyze(["lunar"], mini_lexicon)
    assert tok.pos is Pos.NOUN


def test_dictionary_surface_hit_suppresses_finite_verb_reading(mini_lexicon):
    # "casas" could parse as a form of "casar"; the dictionary hit on the
    # stripped singular keeps it a noun
    (tok,) = analyze(["casas"], mini_lexicon)
    assert tok.pos is Pos.NOUN
    assert tok.lemma == "casa"


def test_closed_class_beats_verb_reading(mini_lexicon):
    (tok,) = analyze(["como"], mini_lexicon)
    assert tok.pos is Pos.CONJ


def test_plural_stripping(mini_lexicon):
    (tok,) = analyze(["mujeres"], mini_lexicon)
    assert tok.lemma == "mujer"
    (tok,) = analyze(["gatos"], mini_lexicon)
    assert tok.lemma == "gato"


def test_is_punct():
    assert is_punct(".")
    assert is_punct("¿")
    assert not is_punct("a.")
    assert not is_punct("3")


# --- detect_present_perfect -------------------------------------------------------

def test_fuse_he_cocinado(mini_lexicon):
    fused = detect_present_perfect(analyze(["he", "cocinado"], mini_lexicon))
    assert len(fused) == 1
    tok = fused[0]
    assert tok.lemma == "cocinar"
    assert tok.pos is Pos.VERB
    assert _features(tok) == (Tense.PRETERITE, Person.P1, Number.SG)
    assert tok.parts == ("he", "cocinado")


def test_fuse_has_leido(mini_lexicon):
    fused = detect_present_perfect(analyze(["has", "leido"], mini_lexicon))
    assert len(fused) == 1
    assert fused[0].lemma == "leer"
    assert _features(fused[0]) == (Tense.PRETERITE, Person.P2, Number.SG)


def test_no_auxiliary_passthrough(mini_lexicon):
    analyzed = analyze(["libro"], mini_lexicon)
    assert detect_present_perfect(analyzed) == analyzed


def test_aux_without_participle_passthrough(mini_lexicon):
    analyzed = analyze(["has", "libro"], mini_lexicon)
    assert detect_present_perfect(analyzed) == analyzed


def test_fusion_length_accounting(mini_lexicon):
    analyzed = analyze(
        tokenize("He cocinado y has leido mucho."), mini_lexicon
    )
    fused = detect_present_perfect(analyzed)
    assert len(fused) == len(analyzed) - 2


def test_fusion_idempotent(mini_lexicon):
    for text, _ in GOLDEN_PAIRS + [("He cocinado hoy.", "")]:
        once = detect_present_perfect(analyze(tokenize(text), mini_lexicon))
        assert detect_present_perfect(once) == once


def test_nonfinite_features_reject_person():
    with pytest.raises(ValueError):
        VerbFeatures(Tense.PARTICIPLE, Person.P1, Number.SG)
