import json
import shutil
from fractions import Fraction

import pytest
from hypothesis import given

from casimirlab import fixtures
from casimirlab.composite import CompositePair
from casimirlab.labels import (
    LabelSyntaxError,
    format_label,
    format_partition,
    format_weight,
    instantiate_label,
    parse_composite,
    parse_label,
    parse_partition,
    parse_weight,
)

from conftest import composite_pairs, partitions


def test_partition_syntax():
    assert parse_partition("[4,2,2]") == (4, 2, 2)
    assert parse_partition("[2^3,1^2]") == (2, 2, 2, 1, 1)
    assert parse_partition("[]") == ()
    assert parse_partition("∅") == ()


@pytest.mark.parametrize("text,pos", [("[2,,1]", 3), ("4,2]", 0), ("[1,2]", None), ("[3,1] x", None)])
def test_partition_errors_report_position(text, pos):
    with pytest.raises(ValueError) as exc:
        parse_partition(text)
    if pos is not None:
        assert isinstance(exc.value, LabelSyntaxError)
        assert exc.value.pos == pos
        assert f"at position {pos}" in str(exc.value)


def test_composite_and_weight_syntax():
    assert parse_composite("([3,1],[4,2])") == ((3, 1), (4, 2))
    assert parse_composite("([],[1])") == ((), (1,))
    assert parse_weight("1*w1+2*w3", 4) == (1, 0, 2, 0)
    assert format_weight((1, 0, 2, 0)) == "1*w1 + 2*w3"
    with pytest.raises(LabelSyntaxError):
        parse_weight("w9", 4)


def test_parse_label_per_family():
    assert parse_label("sl", "([1],[1])") == CompositePair((1,), (1,))
    assert parse_label("so", "[2,2]") == (2, 2)
    assert parse_label("e6", "1*w1+1*w6", 6) == (1, 0, 0, 0, 0, 1)
    with pytest.raises(ValueError, match="rank required"):
        parse_label("e6", "1*w1")


def test_instantiate_label_absent_terms():
    assert instantiate_label("[{n+1},{n}]", "so", n=2) == (3, 2)
    assert instantiate_label("[{n-1},1]", "so", n=1) is None
    assert instantiate_label("{n-2}*w1", "g2", 2, n=1) is None


@given(partitions())
def test_partition_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@given(composite_pairs())
def test_composite_round_trip(p):
    assert parse_label("sl", format_label("sl", p)) == p


def test_eval_expr():
    assert fixtures.eval_expr("(N-2)*n/2", N=7, n=3) == Fraction(15, 2)
    assert fixtures.eval_expr("2^3 - N", N=1) == 7
    with pytest.raises(fixtures.FixtureError):
        fixtures.eval_expr("__import__('os')")
    with pytest.raises(fixtures.FixtureError):
        fixtures.eval_expr("k + 1", n=1)


def test_packaged_fixtures_verify():
    for name in ("vogel_table", "ad_sl", "so_adk", "exceptional_box_y2prime", "e8_ad_yn"):
        assert fixtures.load(name)["fixture"] == name


@pytest.fixture
def fixture_copy(tmp_path):
    src = fixtures.fixtures_dir()
    dst = tmp_path / "fx"
    shutil.copytree(src, dst)
    return dst


def test_checksum_mismatch_fails_loudly(fixture_copy):
    path = fixture_copy / "vogel_table.json"
    data = json.loads(path.read_text())
    data["note"] = "edited"
    path.write_text(json.dumps(data))
    with pytest.raises(fixtures.FixtureError, match="checksum mismatch"):
        fixtures.load("vogel_table", fixture_copy)
    fixtures.rehash(fixture_copy)
    assert fixtures.load("vogel_table", fixture_copy)["note"] == "edited"


def test_env_var_override(fixture_copy, monkeypatch):
    (fixture_copy / "ad_sl.json").write_text("{}")
    monkeypatch.setenv(fixtures.ENV_VAR, str(fixture_copy))
    with pytest.raises(fixtures.FixtureError):
        fixtures.load("ad_sl")


def test_missing_manifest(tmp_path):
    with pytest.raises(fixtures.FixtureError, match="manifest"):
        fixtures.load("vogel_table", tmp_path)
