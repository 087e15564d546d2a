import pytest
from sympy import isprime

from zdgraph.catalog import (
    Catalog,
    CatalogError,
    builtin_catalog,
    dump_catalog,
    generate_zn_range,
    load_catalog,
    parse_catalog,
)
from zdgraph.ringspec import Product, Zn, parse_ring_spec
from zdgraph.rings import zero_divisors_star


def test_builtin_contents():
    cat = builtin_catalog()
    assert len(cat) == 18
    assert cat.get("Z390") == Zn(390)
    assert cat.get("Z4xGF(4)") == parse_ring_spec("Z4 x GF(4)")
    assert len(set(cat.names())) == len(cat)


def test_builtin_vertex_counts():
    counts = {name: len(zero_divisors_star(spec)) for name, spec in builtin_catalog()}
    assert counts["Z6"] == 3 and counts["Z2xZ4"] == 5 and counts["Z12"] == 7
    assert counts["Z4xGF(4)"] == counts["Z2xZ2xZ3"] == 9
    assert counts["Z390"] == 293


def test_parse_catalog_file(tmp_path):
    path = tmp_path / "rings.txt"
    path.write_text("# examples\n\nZ6\nsmall = Z2 x Z4  # trailing comment\nGF(4) x Z3\n", encoding="utf-8")
    cat = load_catalog(path)
    assert cat.names() == ["Z6", "small", "GF(4)xZ3"]
    assert cat.get("small") == Product((Zn(2), Zn(4)))
    assert cat.source == str(path)


def test_round_trip():
    cat = builtin_catalog()
    again = parse_catalog(dump_catalog(cat))
    assert again.entries == cat.entries


@pytest.mark.parametrize(
    "text,line",
    [("Z6\nZ4[x]/(x)\n", 2), ("Z6\nZ6\n", 2), ("= Z6\n", 1), ("\n\nQ7\n", 3)],
)
def test_parse_errors_report_line(text, line):
    with pytest.raises(CatalogError) as info:
        parse_catalog(text, "rings.txt")
    assert info.value.line == line
    assert str(info.value).startswith(f"rings.txt:{line}:")


def test_duplicate_entries_rejected():
    with pytest.raises(CatalogError, match="duplicate"):
        Catalog((("a", Zn(4)), ("a", Zn(6))))


def test_zn_range_skips_primes():
    cat = generate_zn_range(2, 30)
    ns = [spec.modulus for _, spec in cat]
    assert ns == [n for n in range(2, 31) if not isprime(n)]
    assert cat.names()[0] == "Z4"


def test_zn_range_400():
    assert len(generate_zn_range(4, 400)) == sum(1 for n in range(4, 401) if not isprime(n)) == 321


def test_zn_range_errors():
    with pytest.raises(CatalogError):
        generate_zn_range(10, 5)
    with pytest.raises(CatalogError):
        generate_zn_range(1, 5)


def test_missing_file():
    with pytest.raises(OSError):
        load_catalog("/nonexistent/rings.txt")
