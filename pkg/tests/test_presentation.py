import pytest
from hypothesis import given
from hypothesis import strategies as st

from corank.abelian import abelianize
from corank.presentation import (
    ParseError,
    Presentation,
    Word,
    direct_product,
    format_presentation,
    free_product,
    parse,
)

from helpers import presentations, words


def test_parse_commutator():
    p = parse("< a, b | a b a^-1 b^-1 >")
    assert p.generators == ("a", "b")
    assert p.relators == (Word(((0, 1), (1, 1), (0, -1), (1, -1))),)


def test_parse_cyclic():
    p = parse("< a | a^2 >")
    assert p.generators == ("a",)
    assert p.relators == (Word(((0, 2),)),)


def test_parse_free_group():
    p = parse("< a, b | >")
    assert p == Presentation(("a", "b"), ())


def test_parse_is_whitespace_insensitive():
    assert parse("<a,b|a b a^-1 b^-1>") == parse("  <  a ,b |\n a  b a ^ -1 b^-1 > ")


def test_parse_freely_reduces():
    p = parse("< a, b | a a^2 b b^-1 a^-3, a^2 b^1 b, a b a^-1 >")
    # first relator cancels completely and is dropped
    assert [w.syllables for w in p.relators] == [((0, 2), (1, 2)), ((0, 1), (1, 1), (0, -1))]


def test_parse_nested_cancellation():
    p = parse("< a, b | a b b^-1 a^-1 b >")
    assert p.relators == (Word(((1, 1),)),)


def test_primed_names():
    p = parse("< a, a' , x_1 | a'^3 x_1 >")
    assert p.generators == ("a", "a'", "x_1")
    assert p.relators[0].syllables == ((1, 3), (2, 1))


@pytest.mark.parametrize(
    "text, pos, fragment",
    [
        ("< a | b >", 6, "unknown generator"),
        ("< a, a | >", 5, "duplicate"),
        ("< a | a^0 >", 8, "nonzero"),
        ("< a | a^ >", 9, "expected 'int'"),
        ("< a | a, >", 9, "relator word"),
        ("< a | a", 7, "expected '>'"),
        ("a | a >", 0, "expected '<'"),
        ("< a | a > x", 10, "expected 'eof'"),
        ("< a | a# >", 7, "unexpected character"),
        ("< 1a | >", 2, "expected '|'"),
    ],
)
def test_parse_errors(text, pos, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert fragment in str(info.value)


def test_format_examples():
    assert format_presentation(Presentation(("a",), (Word(((0, 2),)),))) == "< a | a^2 >"
    assert format_presentation(Presentation()) == "< | >"
    assert format_presentation(parse("<a,b|>")) == "< a, b | >"
    assert str(parse("<a,b|a b a^-1 b^-1, b^5>")) == "< a, b | a b a^-1 b^-1, b^5 >"


@given(presentations())
def test_format_parse_roundtrip(p):
    assert parse(format_presentation(p)) == p


def test_word_invariants():
    with pytest.raises(ValueError):
        Word(((0, 0),))
    with pytest.raises(ValueError):
        Word(((0, 1), (0, 1)))
    assert Word.reduced([(0, 1), (0, 1)]).syllables == ((0, 2),)


def test_presentation_invariants():
    with pytest.raises(ValueError):
        Presentation(("a", "a"), ())
    with pytest.raises(ValueError):
        Presentation(("",), ())
    with pytest.raises(ValueError):
        Presentation(("a",), (Word(((1, 1),)),))


@given(words(3), words(3))
def test_word_inverse_cancels(u, v):
    assert not (u * u.inverse())
    assert (u * v).inverse() == v.inverse() * u.inverse()


def test_free_product_examples():
    z, zb = parse("<a|>"), parse("<b|>")
    assert free_product(z, zb) == parse("<a,b|>")
    c2 = parse("<a|a^2>")
    assert format_presentation(free_product(c2, c2)) == "< a, a' | a^2, a'^2 >"
    p = parse("<x, y | x y^2>")
    assert free_product(Presentation(), p) == p
    assert free_product(p, Presentation()) == p


def test_free_product_renaming_avoids_all_clashes():
    p1 = parse("<a|>")
    p2 = parse("<a, a'|a a'>")
    q = free_product(p1, p2)
    assert q.generators == ("a", "a''", "a'")
    assert q.relators[0].syllables == ((1, 1), (2, 1))


def test_direct_product_examples():
    assert direct_product(parse("<a|>"), parse("<b|>")) == parse("<a,b | a b a^-1 b^-1>")
    p = parse("<x, y | x y^2>")
    assert direct_product(Presentation(), p) == p
    z2 = parse("<a,b|a b a^-1 b^-1>")
    c2 = parse("<c|c^2>")
    q = direct_product(z2, c2)
    assert q.ngens == 3
    assert len(q.relators) == 1 + 1 + 2
    assert abelianize(q).betti == 2


@given(presentations(), presentations())
def test_product_generator_counts(p1, p2):
    for op in (free_product, direct_product):
        q = op(p1, p2)
        assert q.ngens == p1.ngens + p2.ngens
        assert len(set(q.generators)) == q.ngens
    assert len(free_product(p1, p2).relators) == len(p1.relators) + len(p2.relators)


@given(presentations(), st.data())
def test_products_roundtrip_through_text(p, data):
    q = data.draw(presentations())
    for op in (free_product, direct_product):
        r = op(p, q)
        assert parse(format_presentation(r)) == r
