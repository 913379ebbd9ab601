from nashblowup.eta import EtaSequence, staircase
from nashblowup.nashfan import minimal_resolution_fan, newton_fan, family_points
from nashblowup.plotting import plot_fan, plot_staircase


def test_fan_svg_is_reproducible(tmp_path):
    fan = newton_fan(family_points(3)).to_json()
    a = plot_fan(fan, tmp_path / "a.svg", highlight=minimal_resolution_fan(3).to_json())
    b = plot_fan(fan, tmp_path / "b.svg", highlight=minimal_resolution_fan(3).to_json())
    text = a.read_text()
    assert text.startswith("<?xml") and "<svg" in text
    assert a.read_bytes() == b.read_bytes()


def test_staircase_svg(tmp_path):
    data = staircase(6, EtaSequence.parse("1,0,1,1,1,1,2")).to_json()
    out = plot_staircase(data, tmp_path / "t.svg")
    assert out.stat().st_size > 1000
