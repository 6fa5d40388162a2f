import pathlib
import subprocess

import pytest

import router_plots
from router_plots import FigureSpec, SchemaError, read_map_csv, read_spectrum_csv, render
from router_plots.cli import main as cli_main


def router(tmp_path, name, *args):
    """Generate a CSV via the router command line tool (the only coupling)."""
    out = tmp_path / name
    subprocess.run(
        ["router", *args, "--out", str(out)], check=True, capture_output=True
    )
    return out


@pytest.fixture(scope="module")
def spectra(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("spectra")
    paths = []
    for n in (1, 2, 3, 5):
        paths.append(
            router(
                tmp, f"n{n}.csv", "spectrum",
                "--set", f"n_atoms={n}", "--set", "n_points=201",
            )
        )
    return paths


@pytest.fixture(scope="module")
def maps(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("maps")
    paths = []
    for obs in ("T_a", "T_bfwd", "R_a", "T_bback"):
        paths.append(
            router(
                tmp, f"{obs}.csv", "map",
                "--set", f"observable={obs}",
                "--set", "n_points=41", "--set", "p_points=21",
            )
        )
    return paths


class TestReaders:
    def test_spectrum_roundtrip(self, spectra):
        meta, cols = read_spectrum_csv(spectra[0])
        assert meta["n_atoms"] == "1"
        assert len(cols["E"]) == 201
        total = cols["R_a"] + cols["T_a"] + cols["T_bback"] + cols["T_bfwd"]
        assert abs(total - 1.0).max() < 1e-9

    def test_map_roundtrip(self, maps):
        meta, e_axis, p_axis, grid = read_map_csv(maps[0])
        assert grid.shape == (41, 21)
        assert meta["observable"] == "T_a"
        assert 0.0 <= grid.min() and grid.max() <= 1.0

    def test_empty_csv_rejected(self, tmp_path):
        bad = tmp_path / "empty.csv"
        bad.write_text("")
        with pytest.raises(SchemaError, match="empty CSV"):
            read_spectrum_csv(bad)

    def test_missing_column_is_named(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("E,R_a,T_a,T_bback\n0.0,0.25,0.25,0.25\n")
        with pytest.raises(SchemaError, match="T_bfwd"):
            read_spectrum_csv(bad)

    def test_non_numeric_cell_is_located(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("E,param,value\n0.0,0.1,oops\n")
        with pytest.raises(SchemaError, match="'value'"):
            read_map_csv(bad)

    def test_ragged_grid_rejected(self, tmp_path):
        bad = tmp_path / "ragged.csv"
        bad.write_text("E,param,value\n0,0,1\n0,1,1\n1,0,1\n")
        with pytest.raises(SchemaError, match="dense"):
            read_map_csv(bad)


class TestRender:
    def test_four_panel_spectrum(self, spectra, tmp_path):
        out = tmp_path / "spectra.png"
        render(
            FigureSpec(
                csv_paths=tuple(str(p) for p in spectra),
                kind="spectrum-panel",
                out_path=str(out),
                layout=(2, 2),
            )
        )
        assert out.stat().st_size > 0

    def test_heatmap_grid(self, maps, tmp_path):
        out = tmp_path / "maps.png"
        render(
            FigureSpec(
                csv_paths=tuple(str(p) for p in maps),
                kind="heatmap",
                out_path=str(out),
                layout=(2, 2),
            )
        )
        assert out.stat().st_size > 0

    def test_cross_sections(self, maps, tmp_path):
        out = tmp_path / "slices.png"
        render(
            FigureSpec(
                csv_paths=(str(maps[1]),),
                kind="cross-section-grid",
                out_path=str(out),
                cross_sections=(0.0, 0.75, 1.5),
            )
        )
        assert out.stat().st_size > 0

    def test_schema_error_writes_nothing(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("")
        out = tmp_path / "fig.png"
        with pytest.raises(SchemaError):
            render(
                FigureSpec(csv_paths=(str(bad),), kind="spectrum-panel",
                           out_path=str(out))
            )
        assert not out.exists()

    def test_missing_cross_section_rejected(self, maps, tmp_path):
        with pytest.raises(SchemaError, match="cross section"):
            render(
                FigureSpec(
                    csv_paths=(str(maps[0]),),
                    kind="cross-section-grid",
                    out_path=str(tmp_path / "x.png"),
                    cross_sections=(123.0,),
                )
            )

    def test_bad_kind_rejected(self):
        with pytest.raises(ValueError):
            FigureSpec(csv_paths=("a.csv",), kind="piechart", out_path="x.png")


class TestCli:
    def test_end_to_end(self, spectra, tmp_path):
        out = tmp_path / "fig.png"
        code = cli_main(
            ["spectrum-panel", *[str(p) for p in spectra],
             "--out", str(out), "--layout", "2x2"]
        )
        assert code == 0
        assert out.stat().st_size > 0

    def test_schema_error_exit_code(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("nonsense\n1,2\n")
        code = cli_main(["spectrum-panel", str(bad), "--out", str(tmp_path / "f.png")])
        assert code == 1


def test_does_not_import_primary_package():
    # coupling is the CSV contract only: no source file may import the
    # scattering package
    pkg_dir = pathlib.Path(router_plots.__file__).parent
    for src in pkg_dir.rglob("*.py"):
        assert "photon_router" not in src.read_text(), src
