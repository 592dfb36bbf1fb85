import json

import pytest

from homlong import fixtures as fx
from homlong import io as hio
from homlong.cli import main
from homlong.io import FileFormatError
from homlong.linalg import Matrix, flip_matrix
from homlong.longdimod import canonical_dimodule
from homlong.longeq import HAlphaLongDimodule, OperatorOnTensorSquare


@pytest.fixture()
def files(tmp_path):
    kz2 = fx.kz2()
    obj = hio.algebra_to_json(kz2)
    obj["R"] = hio.matrix_json(fx.kz2_rmatrix())
    obj["form"] = hio.matrix_json(fx.kz2_form())
    hio.dump_json(obj, tmp_path / "kz2.json")
    hio.dump_json({"kind": "context", "H": "kz2.json", "B": "kz2.json"},
                  tmp_path / "ctx.json")
    hio.save_structure(fx.sign_dimodule(), tmp_path / "sign.json")
    hio.save_structure(fx.standard_dimodules()["trivial"], tmp_path / "trivial.json")
    hio.save_structure(canonical_dimodule(kz2, kz2), tmp_path / "canonical.json")
    hio.save_structure(fx.kz4(), tmp_path / "kz4.json")
    hio.dump_json({"matrix": hio.matrix_json(fx.kz4_twist_map())}, tmp_path / "phi.json")
    hio.save_structure(OperatorOnTensorSquare(2, flip_matrix(2, 2),
                                              Matrix.diagonal([1, 2])),
                       tmp_path / "flipop.json")
    hio.dump_json({"mu": hio.matrix_json(Matrix.identity(2))}, tmp_path / "id2.json")
    sd = fx.sign_dimodule()
    hio.save_structure(HAlphaLongDimodule(kz2, 1, sd.action, sd.coaction, sd.mu,
                                          sd.basis), tmp_path / "halpha.json")
    bad = dict(obj)
    bad["gamma"] = [[1, 0], [0, 0]]
    bad.pop("R")
    bad.pop("form")
    hio.dump_json(bad, tmp_path / "broken.json")
    return tmp_path


def p(files, name):
    return str(files / name)


# ---------------------------------------------------------------------------
# io round trips

def test_structure_round_trips(tmp_path, kz2, kz4t):
    subjects = [
        kz2, kz4t, fx.sweedler_twisted(), kz2.algebra, kz2.coalgebra,
        fx.sign_module(), fx.sign_comodule(),
        fx.sign_dimodule(), canonical_dimodule(kz2, kz2),
        OperatorOnTensorSquare(2, flip_matrix(2, 2), Matrix.diagonal([1, 2])),
    ]
    for i, s in enumerate(subjects):
        path = tmp_path / ("s%d.json" % i)
        hio.save_structure(s, path)
        loaded = hio.load_structure(str(path))
        if hasattr(s, "bialgebra"):
            assert loaded == s
        elif hasattr(s, "action") and hasattr(s, "coaction"):
            assert loaded.action == s.action and loaded.coaction == s.coaction
        elif hasattr(s, "matrix"):
            assert loaded.matrix == s.matrix and loaded.structure_map == s.structure_map
        else:
            assert loaded == s


def test_scalar_strings_round_trip(tmp_path):
    m = Matrix([["1/3", "-2/7"], [0, 5]])
    hio.dump_json({"kind": "operator", "n": 1, "mu": [[1]],
                   "matrix": [["1/3"]]}, tmp_path / "op.json")
    op = hio.load_structure(str(tmp_path / "op.json"))
    from fractions import Fraction
    assert op.matrix[0, 0] == Fraction(1, 3)
    assert hio.matrix_json(m)[0][0] == "1/3"
    assert hio.matrix_json(m)[1][1] == 5


def test_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FileFormatError):
        hio.load_structure(str(bad))
    bad2 = tmp_path / "bad2.json"
    hio.dump_json({"kind": "mystery"}, bad2)
    with pytest.raises(FileFormatError):
        hio.load_structure(str(bad2))
    bad3 = tmp_path / "bad3.json"
    hio.dump_json({"kind": "hom-algebra", "dim": 2, "mult": [[[1]]], "unit": [1, 0]}, bad3)
    with pytest.raises(FileFormatError):
        hio.load_structure(str(bad3))


def test_context_inline_and_r_from_file(files):
    ctx = hio.load_context(p(files, "ctx.json"))
    assert ctx.valid and ctx.triangular and ctx.cotriangular


# ---------------------------------------------------------------------------
# CLI

def test_validate_exit_codes(files, capsys):
    assert main(["validate", p(files, "kz2.json")]) == 0
    out = capsys.readouterr().out
    assert "triangular" in out and "result: ok" in out
    assert main(["validate", p(files, "broken.json")]) == 1
    out = capsys.readouterr().out
    assert "witness" in out
    assert main(["validate", p(files, "nosuch.json")]) == 2


def test_check_commands(files, capsys):
    base = ["check", "ybe", "--ctx", p(files, "ctx.json"),
            "-U", p(files, "sign.json"), "-V", p(files, "trivial.json"),
            "-W", p(files, "canonical.json")]
    assert main(base) == 0
    assert main(["check", "hexagon", "--ctx", p(files, "ctx.json"),
                 "-U", p(files, "sign.json"), "-V", p(files, "sign.json"),
                 "-W", p(files, "trivial.json")]) == 0
    assert main(["check", "longeq", "-R", p(files, "flipop.json")]) == 1
    out = capsys.readouterr().out
    assert "witness" in out
    assert main(["check", "symmetry", "--ctx", p(files, "ctx.json"),
                 "-M", p(files, "sign.json"), "-N", p(files, "sign.json")]) == 0
    assert main(["check", "snake", "-D", p(files, "canonical.json"),
                 "--side", "right"]) == 0
    assert main(["check", "roundtrip", "-D", p(files, "canonical.json")]) == 0
    assert main(["check", "coherence", "-U", p(files, "sign.json"),
                 "-V", p(files, "trivial.json"), "-W", p(files, "sign.json")]) == 0


def test_check_incompatible_inputs(files, tmp_path, capsys):
    hio.save_structure(fx.trivial_dimodule(fx.kz4_twisted(), fx.kz2()),
                       tmp_path / "other.json")
    code = main(["check", "ybe", "--ctx", p(files, "ctx.json"),
                 "-U", str(tmp_path / "other.json"),
                 "-V", p(files, "sign.json"), "-W", p(files, "sign.json")])
    assert code == 2


def test_build_pipeline(files, capsys):
    out = str(files / "rsol.json")
    assert main(["build", "dimodule-solution", "-D", p(files, "halpha.json"),
                 "-o", out]) == 0
    assert main(["check", "longeq", "-R", out]) == 0
    assert main(["build", "twist", "--base", p(files, "kz4.json"),
                 "--phi", p(files, "phi.json"), "-o", str(files / "kz4h.json")]) == 0
    assert main(["validate", str(files / "kz4h.json")]) == 0
    assert main(["build", "braid", "--ctx", p(files, "ctx.json"),
                 "-M", p(files, "sign.json"), "-N", p(files, "canonical.json"),
                 "-o", str(files / "braid.json")]) == 0
    braid = json.load(open(files / "braid.json"))
    assert braid["kind"] == "braid-operator"
    assert len(braid["rows"]) == 4 and len(braid["cols"]) == 4
    assert main(["build", "dual", "-D", p(files, "sign.json"),
                 "-o", str(files / "dual.json")]) == 0
    assert main(["validate", str(files / "dual.json")]) == 0
    assert main(["build", "tensor", "-M", p(files, "sign.json"),
                 "-N", p(files, "sign.json"), "-o", str(files / "t.json")]) == 0
    assert main(["build", "smash", "-D", p(files, "sign.json"),
                 "-o", str(files / "smash.json")]) == 0
    assert main(["validate", str(files / "smash.json")]) == 0


def test_build_extension(files, tmp_path):
    hio.save_structure(fx.sign_module(), tmp_path / "signmod.json")
    assert main(["build", "extension", "--base", p(files, "kz2.json"),
                 "-M", str(tmp_path / "signmod.json"),
                 "-o", str(tmp_path / "ext.json")]) == 0
    assert main(["validate", str(tmp_path / "ext.json")]) == 0


def test_search_command(files, capsys):
    assert main(["search", "--mu", p(files, "id2.json"), "--set", "0,1",
                 "--shape", "diagonal", "-o", str(files / "sols.json")]) == 0
    out = capsys.readouterr().out
    assert "16 solutions" in out
    sols = json.load(open(files / "sols.json"))
    assert len(sols["solutions"]) == 16
    assert main(["search", "--mu", p(files, "id2.json"), "--set", "",
                 "--shape", "diagonal"]) == 0
    out = capsys.readouterr().out
    assert "0 solutions" in out
    # cap violation reports the cardinality and exits 2
    mu3 = files / "id3.json"
    hio.dump_json({"mu": hio.matrix_json(Matrix.identity(3))}, mu3)
    assert main(["search", "--mu", str(mu3), "--set", "0,1", "--shape", "full"]) == 2


def test_symmetry_diagnose_exit(files, tmp_path, capsys):
    # degenerate form: context invalid, plain call exits 2
    kz2 = fx.kz2()
    obj = hio.algebra_to_json(kz2)
    obj["R"] = hio.matrix_json(fx.kz2_rmatrix())
    obj["form"] = [[1, 1], [1, 0]]
    hio.dump_json(obj, tmp_path / "kz2d.json")
    hio.dump_json({"kind": "context", "H": str(tmp_path / "kz2d.json"),
                   "B": str(tmp_path / "kz2d.json")}, tmp_path / "ctxd.json")
    code = main(["check", "symmetry", "--ctx", str(tmp_path / "ctxd.json"),
                 "-M", p(files, "sign.json"), "-N", p(files, "sign.json"),
                 "--diagnose"])
    assert code == 2


def test_symmetry_diagnose_non_triangular(tmp_path, capsys):
    # valid context whose triangular flag is false: diagnose reports the
    # composite and still exits 2 for the unmet hypothesis
    klein = fx.klein_hopf()
    obj = hio.algebra_to_json(klein)
    obj["R"] = hio.matrix_json(fx.klein_rmatrix())
    obj["form"] = hio.matrix_json(fx.trivial_form(klein))
    hio.dump_json(obj, tmp_path / "klein.json")
    hio.dump_json({"kind": "context", "H": "klein.json", "B": "klein.json"},
                  tmp_path / "ctx4.json")
    from homlong.braidcat import module_as_dimodule
    reg = module_as_dimodule(klein, fx.regular_module(klein), klein)
    hio.save_structure(reg, tmp_path / "reg.json")
    without = main(["check", "symmetry", "--ctx", str(tmp_path / "ctx4.json"),
                    "-M", str(tmp_path / "reg.json"),
                    "-N", str(tmp_path / "reg.json")])
    assert without == 2
    capsys.readouterr()
    code = main(["check", "symmetry", "--ctx", str(tmp_path / "ctx4.json"),
                 "-M", str(tmp_path / "reg.json"),
                 "-N", str(tmp_path / "reg.json"), "--diagnose"])
    out = capsys.readouterr().out
    assert code == 2
    assert "symmetry" in out and "hypothesis" in out


def test_validate_and_check_yd(files, tmp_path, capsys):
    kz2 = fx.kz2()
    from homlong.linalg import Tensor3
    from homlong.repmod import YetterDrinfeldModule
    yd = YetterDrinfeldModule(kz2, 1, Tensor3([[[1]], [[-1]]]),
                              Tensor3([[[0], [1]]]), Matrix.identity(1), ("v",))
    hio.save_structure(yd, tmp_path / "yd.json")
    assert main(["validate", str(tmp_path / "yd.json")]) == 0
    out = capsys.readouterr().out
    # the bundle keeps the Hopf structure, so the reformulation runs too
    assert "HYD-prime" in out and "hyd-consistent" in out
    assert main(["check", "yd", "-M", str(tmp_path / "yd.json")]) == 0


def test_validate_halpha_and_module_files(files, tmp_path):
    kz2 = fx.kz2()
    hio.save_structure(fx.sign_module(), tmp_path / "mod.json")
    assert main(["validate", str(tmp_path / "mod.json")]) == 0
    hio.save_structure(fx.sign_comodule(), tmp_path / "comod.json")
    assert main(["validate", str(tmp_path / "comod.json")]) == 0
    sd = fx.sign_dimodule()
    hio.save_structure(HAlphaLongDimodule(kz2, 1, sd.action, sd.coaction,
                                          sd.mu, sd.basis), tmp_path / "ha.json")
    assert main(["validate", str(tmp_path / "ha.json")]) == 0
    assert main(["validate", p(files, "sign.json")]) == 0
    assert main(["validate", p(files, "flipop.json")]) == 1


def test_verbose_and_kind_override(files, capsys):
    assert main(["--verbose", "validate", p(files, "kz2.json"),
                 "--kind", "hom-algebra"]) == 0
    out = capsys.readouterr().out
    assert "HA2-assoc" in out and "bialgebra" not in out


def test_global_diagnose_position(files, tmp_path, capsys):
    klein = fx.klein_hopf()
    obj = hio.algebra_to_json(klein)
    obj["R"] = hio.matrix_json(fx.klein_rmatrix())
    obj["form"] = hio.matrix_json(fx.trivial_form(klein))
    hio.dump_json(obj, tmp_path / "klein.json")
    hio.dump_json({"kind": "context", "H": "klein.json", "B": "klein.json"},
                  tmp_path / "ctx4.json")
    tr = fx.trivial_dimodule(klein, klein)
    hio.save_structure(tr, tmp_path / "tr.json")
    # --diagnose accepted before the subcommand as a global flag
    code = main(["--diagnose", "check", "symmetry", "--ctx",
                 str(tmp_path / "ctx4.json"), "-M", str(tmp_path / "tr.json"),
                 "-N", str(tmp_path / "tr.json")])
    out = capsys.readouterr().out
    assert code == 2
    assert "hypothesis" in out


def test_json_format_round_trip(files, capsys):
    assert main(["--format", "json", "check", "longeq",
                 "-R", p(files, "flipop.json")]) == 1
    out = capsys.readouterr().out
    parsed = json.loads(out)
    assert parsed["exit_code"] == 1
    # re-emitting the parsed report is the identity
    assert json.dumps(parsed, indent=2, sort_keys=True, ensure_ascii=False) == out.strip()


def test_deterministic_output(files, capsys):
    main(["validate", p(files, "kz2.json")])
    first = capsys.readouterr().out
    main(["validate", p(files, "kz2.json")])
    second = capsys.readouterr().out
    assert first == second
