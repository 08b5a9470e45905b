import io
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from laspa.cli import (
    Radius,
    Render,
    Solve,
    format_complex_list,
    main,
    parse_command,
    parse_complex_list,
    run_command,
)
from laspa.errors import ParseError
from laspa.polynomial import from_roots

from conftest import random_root_set


def run(argv):
    cmd = parse_command(argv)
    out, err = io.StringIO(), io.StringIO()
    status = run_command(cmd, out, err)
    return status, out.getvalue(), err.getvalue()


class TestParse:
    def test_reals(self):
        assert parse_complex_list("24,-50,35,-10,1") == [24, -50, 35, -10, 1]

    def test_complex(self):
        assert parse_complex_list("1,0+1i,-1,0-1i") == [1, 1j, -1, -1j]

    def test_scientific(self):
        assert parse_complex_list("1e-3-2.5E+2i,.5") == [complex(1e-3, -250), 0.5]

    def test_empty_entry(self):
        with pytest.raises(ParseError) as info:
            parse_complex_list("1,,2")
        assert info.value.index == 2

    @pytest.mark.parametrize("bad, index", [("1,2x", 2), ("1 + 2i", 1), ("i", 1), ("1,2,3+4j", 3)])
    def test_bad_tokens(self, bad, index):
        with pytest.raises(ParseError) as info:
            parse_complex_list(bad)
        assert info.value.index == index

    @given(
        st.lists(
            st.complex_numbers(allow_nan=False, allow_infinity=False),
            min_size=1,
            max_size=8,
        )
    )
    def test_round_trip(self, zs):
        assert parse_complex_list(format_complex_list(zs)) == zs


class TestCommands:
    def test_parse_variants(self):
        assert isinstance(parse_command(["solve", "--coeffs", "1,2,1"]), Solve)
        assert isinstance(parse_command(["radius", "--roots", "1,2,3,4"]), Radius)
        assert isinstance(parse_command(["render", "--roots", "1,-1", "--out", "x.ppm"]), Render)

    def test_negative_leading_value(self):
        cmd = parse_command(["solve", "--coeffs", "-1,0,0,0,1"])
        assert cmd.poly.coeffs == (-1, 0, 0, 0, 1)

    def test_solve(self):
        status, out, _ = run(["solve", "--coeffs", "24,-50,35,-10,1"])
        lines = out.splitlines()
        assert status == 0 and len(lines) == 4
        for k, line in enumerate(lines, 1):
            re, im, res, cert = line.split(" ")
            assert abs(float(re) - k) < 1e-12 and abs(float(im)) < 1e-12
            assert float(res) < 1e-11 and cert == "true"

    def test_solve_17_digits(self):
        _, out, _ = run(["solve", "--coeffs", "-2,0,1"])
        first = out.split()[0].lstrip("-")
        assert first.startswith("1.4142135623730951")

    def test_roots_and_coeffs_agree(self):
        import random

        rng = random.Random(12)
        for _ in range(10):
            roots = random_root_set(rng, rng.randint(4, 8))
            coeffs = from_roots(roots).coeffs
            _, a, _ = run(["solve", "--roots", format_complex_list(roots)])
            _, b, _ = run(["solve", "--coeffs", format_complex_list(coeffs)])
            for la, lb in zip(a.splitlines(), b.splitlines()):
                za = complex(*map(float, la.split()[:2]))
                zb = complex(*map(float, lb.split()[:2]))
                assert abs(za - zb) < 1e-8

    def test_radius(self):
        status, out, _ = run(["radius", "--coeffs", "-1,0,0,0,1"])
        lines = out.splitlines()
        assert status == 0 and len(lines) == 5
        assert lines[-1].startswith("apriori ")
        bound = float(lines[-1].split()[1])
        radii = [float(line.split()[2]) for line in lines[:-1]]
        assert 0 < bound <= min(radii)

    def test_radius_degree_three(self):
        status, out, err = run(["radius", "--coeffs", "1,0,0,1"])
        assert status == 1 and out == "" and "degree must exceed 3" in err

    def test_render(self, tmp_path):
        target = tmp_path / "b.ppm"
        stats = tmp_path / "b.txt"
        status, out, _ = run([
            "render", "--roots", "1,0+1i,-1,0-1i", "--center", "0+0i", "--side", "4",
            "--px", "256", "--max-iter", "64", "--out", str(target), "--stats", str(stats),
        ])
        assert status == 0 and out == f"wrote {target} 256x256\n"
        assert target.stat().st_size == 15 + 3 * 256**2
        lines = stats.read_text().splitlines()
        assert len(lines) == 5 and lines[-1].startswith("none ")
        assert sum(int(line.split()[1]) for line in lines) == 256**2

    def test_render_unwritable(self, tmp_path):
        status, _, err = run(["render", "--roots", "1,-1", "--px", "2", "--out", str(tmp_path / "no" / "x.ppm")])
        assert status == 1 and err.startswith("error:")

    def test_main_parse_error_exit_code(self, capsys):
        assert main(["solve", "--coeffs", "1,,2"]) == 2
        assert "entry 2" in capsys.readouterr().err

    def test_main_zero_leading(self, capsys):
        assert main(["solve", "--coeffs", "1,2,0"]) == 1

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "laspa", "solve", "--coeffs", "-5,1"],
            capture_output=True, text=True, check=False,
        )
        assert proc.returncode == 0
        assert proc.stdout == "5 0 0 false\n"
