import json

import pytest

from qagroups import automata as fa
from qagroups import bimorphism as bim
from qagroups.builtins import BUILTINS, builtin
from qagroups.cli import main
from qagroups.fileformat import FormatError, dumps, loads
from qagroups.structure import validate

PAIRS_FILE = """\
name z_pairs
oracle free_abelian 1
gen a 1
gen b -1
end
dictionary
states 3
initial 0
finals 1
trans 0 a 1
trans 1 a 1
end
relation eps pairs
initial s
finals f
pair s a a f
pair f a a f
end
relation a pairs
initial s
finals f
pair s a a t
pair t a a t
pair t - a f
end
relation b pairs
initial s
finals f
pair s a - t
pair t a a f
pair f a a f
end
"""


def write(tmp_path, text, name="s.qa"):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return str(p)


def drop_block(text, header):
    out, skipping = [], False
    for line in text.splitlines(keepends=True):
        if line.strip() == header:
            skipping = True
        if not skipping:
            out.append(line)
        elif line.strip() == "end":
            skipping = False
    return "".join(out)


class TestRoundTrip:
    @pytest.mark.parametrize("name", BUILTINS)
    def test_semantic(self, name):
        s = builtin(name)
        t = loads(dumps(s))
        assert t.name == s.name
        assert fa.equivalent(t.dictionary, s.dictionary)
        for key in s.keys():
            assert set(bim.enumerate_pairs(t.relations[key], 10)) == set(bim.enumerate_pairs(s.relations[key], 10))
        for w in ("a", "ab", "ba", "aab"):
            if all(c in s.alphabet.symbols for c in w):
                assert t.oracle.evaluate(w) == s.oracle.evaluate(w)

    @pytest.mark.parametrize("name", BUILTINS)
    def test_dump_fixed_point(self, name):
        text = dumps(builtin(name))
        assert dumps(loads(text)) == text


class TestParse:
    def test_pairs_form(self):
        s = loads(PAIRS_FILE)
        assert s.name == "z_pairs"
        assert bim.enumerate_pairs(s.relations["a"], 5) == [(("a",), ("a", "a")), (("a", "a"), ("a", "a", "a"))]

    def test_missing_eps(self):
        with pytest.raises(FormatError):
            loads(drop_block(dumps(builtin("trivial")), "relation eps"))

    def test_line_number_reported(self):
        text = dumps(builtin("trivial")).replace("initial 0", "initial zero", 1)
        with pytest.raises(FormatError) as exc:
            loads(text)
        assert exc.value.line is not None and "line" in str(exc.value)

    def test_unknown_backend(self):
        with pytest.raises(FormatError):
            loads("oracle hyperbolic 2\nend\n")

    def test_unclosed_block(self):
        with pytest.raises(FormatError):
            loads(dumps(builtin("trivial")).rstrip().rsplit("\n", 1)[0])

    def test_comments_ignored(self):
        text = "# header\n" + dumps(builtin("z2_table")).replace("\nend\n", "\nend  # done\n", 1)
        assert validate(loads(text), 4).ok


class TestCli:
    def test_validate_roundtrip(self, tmp_path, capsys):
        path = str(tmp_path / "z.qa")
        assert main(["demo", "z_shortlex", "-o", path]) == 0
        assert main(["validate", path]) == 0

    @pytest.mark.parametrize("name", ["trivial", "z_shortlex"])
    def test_demo_stdout(self, tmp_path, capsys, name):
        assert main(["demo", name]) == 0
        path = write(tmp_path, capsys.readouterr().out)
        assert main(["validate", path]) == 0

    def test_missing_eps_exit_2(self, tmp_path, capsys):
        path = write(tmp_path, drop_block(dumps(builtin("trivial")), "relation eps"))
        assert main(["validate", path]) == 2
        assert "error" in capsys.readouterr().err

    def test_corrupted_relation_exit_1(self, tmp_path, capsys):
        text = dumps(builtin("z_shortlex"))
        eps_body = text.split("relation eps\n", 1)[1].split("end\n", 1)[0]
        head, rest = text.split("relation a\n", 1)
        text = head + "relation a\n" + eps_body + "end\n" + rest.split("end\n", 1)[1]
        path = write(tmp_path, text)
        assert main(["validate", path, "--json"]) == 1
        rep = json.loads(capsys.readouterr().out)["reports"][0]
        assert {"kind": "completeness", "relation": "a", "u": "a", "v": "aa"} in rep["witnesses"]

    def test_demo_unknown_exit_2(self, capsys):
        assert main(["demo", "nosuch"]) == 2

    def test_missing_file_exit_2(self, tmp_path, capsys):
        assert main(["validate", str(tmp_path / "absent.qa")]) == 2

    def test_prove_trivial_constants(self, capsys):
        assert main(["prove", "builtin:trivial", "--json", "--ball", "5"]) == 0
        rep = json.loads(capsys.readouterr().out)
        c = rep["constants"]
        assert (c["k"], c["ell"], c["c"]) == (3, 6, 2)
        assert c["D"] == [30] * 6
        assert rep["verdict"] == "PASS"

    def test_prove_z_shortlex(self, capsys):
        assert main(["prove", "builtin:z_shortlex", "--json"]) == 0
        c = json.loads(capsys.readouterr().out)["constants"]
        assert (c["k"], c["ell"], c["c"]) == (9, 18, 5)
        assert c["D"] == [216, 216, 216, 234]

    def test_prove_violating_stops_at_validation(self, tmp_path, capsys):
        text = PAIRS_FILE.replace("pair t - a f", "pair t - a t\npair t a - f")
        path = write(tmp_path, text)
        assert main(["prove", path, "--json"]) == 1
        rep = json.loads(capsys.readouterr().out)
        assert rep["stopped"] == "validation failed" and rep["verdict"] == "FAIL"

    def test_pairs_file_not_onto(self, tmp_path, capsys):
        # a+ satisfies every relation but misses the non-positive integers
        path = write(tmp_path, PAIRS_FILE)
        assert main(["validate", path]) == 0
        capsys.readouterr()
        assert main(["prove", path, "--json"]) == 1
        stages = {r["name"]: r for r in json.loads(capsys.readouterr().out)["stages"]}
        assert stages["verify_K_dictionary"]["status"] == "INCONCLUSIVE"
        assert {"element": "0"} in stages["verify_K_dictionary"]["witnesses"]

    @pytest.mark.parametrize("cmd", ["prune", "departure", "geometry"])
    def test_subcommands(self, capsys, cmd):
        assert main([cmd, "builtin:z2_table"]) == 0
        assert capsys.readouterr().out.strip()

    def test_geometry_below_minimal_k(self, capsys):
        assert main(["geometry", "builtin:z_shortlex", "--k", "0"]) == 1

    @pytest.mark.parametrize("argv", [["prove", "builtin:z_shortlex"], ["prove", "builtin:trivial", "--json"],
                                      ["prune", "builtin:free_group_rank1", "--json"]])
    def test_byte_stable(self, capsys, argv):
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_bad_usage_exit_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["prove"])
        assert exc.value.code == 2
