import io
import json
import subprocess
import sys

import pytest

from hlf.cli import main
from hlf.elements import LaurentElement
from hlf.foundations import INF, NEG_INF
from hlf.nets import Const, NetSpec, Region
from hlf.serialize import dumps_element, dumps_net, loads_net


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines())


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    def net(name, pieces, dim=1):
        return write(name, dumps_net(NetSpec(dim, tuple((Region(b), r) for b, r in pieces))))

    zero = net("zero.json", [(((None, None),), Const(0))])
    o_t = net("ot.json", [(((None, -1),), Const(INF)), (((0, None),), Const(0))])
    two = net("two.json", [(((None, 1),), Const(NEG_INF)), (((2, 2),), Const(1)),
                           (((3, 4),), Const(NEG_INF)), (((5, 5),), Const(0)),
                           (((6, None),), Const(NEG_INF))])
    x = write("x.json", dumps_element(LaurentElement(1, 3, {(2,): 1, (5,): 27})))
    z = write("z.json", dumps_element(LaurentElement(1, 3)))
    rho = write("rho.json", json.dumps({"dim": 1, "pieces": [
        {"box": [[None, None]], "rule": {"kind": "const", "value": "+inf"}}]}))
    return dict(zero=zero, ot=o_t, two=two, x=x, z=z, rho=rho, tmp=tmp_path, write=write)


def test_classify(files):
    code, out = run("classify", "--net", files["zero"], "--n", "2", "--r", "1", "--kind", "lattice")
    assert code == 3
    f = fields(out)
    assert f["verdict"] == "false" and f["witness.condition"] == "lattice.ii.limit"
    assert f["window.insufficient"] == "true"
    code, out = run("classify", "--net", files["ot"], "--n", "2", "--r", "0", "--kind", "compactoid")
    assert code == 0 and fields(out)["verdict"] == "true"


def test_input_errors(files):
    bad = files["write"]("bad.json", "{not json")
    assert run("classify", "--net", bad, "--n", "2", "--r", "0", "--kind", "lattice")[0] == 1
    gap = files["write"]("gap.json", '{"dim":1,"pieces":[{"box":[[0,null]],"rule":{"kind":"const","value":0}}]}')
    assert run("classify", "--net", gap, "--n", "2", "--r", "0", "--kind", "lattice")[0] == 1
    assert run("classify", "--net", files["zero"], "--n", "3", "--r", "0", "--kind", "lattice")[0] == 1
    assert run("classify", "--net", files["ot"], "--n", "2", "--r", "0", "--kind", "lattice")[0] == 1
    assert run("classify", "--net", str(files["tmp"] / "missing.json"), "--n", "2", "--r", "0",
               "--kind", "lattice")[0] == 1
    assert run("frobnicate")[0] == 1


def test_seminorm_modes(files):
    outs = {}
    for mode in ("padic", "gauge"):
        code, out = run("seminorm", "--net", files["two"], "--element", files["x"], "--mode", mode)
        assert code == 0
        outs[mode] = fields(out)["seminorm"]
    assert outs["padic"] == outs["gauge"] == "3^1 (exponent 1)"
    code, out = run("seminorm", "--net", files["two"], "--element", files["z"])
    assert fields(out)["seminorm"] == "0 (exponent -inf)"
    code, out = run("seminorm", "--net", files["rho"], "--element", files["x"], "--mode", "archimedean")
    assert code == 0 and fields(out)["seminorm"] == "0"
    # +inf values are not allowed for seminorm nets; an affine rho is not a rho net
    assert run("seminorm", "--net", files["ot"], "--element", files["x"], "--mode", "gauge")[0] == 4
    assert run("seminorm", "--net", files["two"], "--element", files["x"], "--mode", "archimedean")[0] == 4


def test_member(files):
    code, out = run("member", "--net", files["zero"], "--element", files["x"])
    assert code == 0 and fields(out)["member"] == "true"
    one = files["write"]("one.json", dumps_net(NetSpec.constant(1, 1)))
    code, out = run("member", "--net", one, "--element", files["x"])
    assert code == 3 and fields(out)["witness.index"] == "[2]"


def test_dual(files):
    a = files["write"]("a.json", dumps_element(LaurentElement(2, 3, {(1, 0): 1})))
    b = files["write"]("b.json", dumps_element(LaurentElement(2, 3, {(-1, 0): 1})))
    code, out = run("dual", "pair", "--x", a, "--y", b)
    assert code == 0 and fields(out)["pair"] == "1"
    dest = files["tmp"] / "polar.json"
    assert run("dual", "polar", "--net", files["zero"], "--out", str(dest))[0] == 0
    assert loads_net(dest.read_text()) == NetSpec.constant(1, 1)
    code, out = run("dual", "cseminorm", "--element", files["x"], "--net", files["zero"], "--n", "2", "--r", "1")
    assert fields(out) == {"c_seminorm": "3^0 (exponent 0)", "compactoid": "false"}
    code, out = run("dual", "reconstruct", "--element", files["x"])
    assert code == 0 and out == open(files["x"]).read()
    code, out = run("dual", "reconstruct", "--element", files["x"], "--window", "[[-6, 6]]")
    assert out == open(files["x"]).read()
    assert run("dual", "reconstruct", "--element", files["x"], "--window", "[[1, 2], [3, 4]]")[0] == 1


def test_convolve(files):
    code, out = run("convolve", "--net1", files["ot"], "--net2", files["ot"], "--window", "2")
    assert code == 0
    assert fields(out) == {"value[-2]": "+inf", "value[-1]": "+inf", "value[0]": "0",
                           "value[1]": "0", "value[2]": "0"}


def test_console_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "hlf", "member", "--net", files["zero"], "--element", files["x"]],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "member: true" in proc.stdout
