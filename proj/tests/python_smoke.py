# Smoke test for the python bindings. Run with the build directory on
# PYTHONPATH so the freshly built _bigrade is picked up.
import _bigrade as bg

CURVE = """
ring x 3 y 2
gens
x0^2*y0^2 + x1^2*y1^2 + x2^2*y0*y1
x2*y0^3 + (x0+x1)*y1^3
"""

MICRO = """
ring x 2 y 2
gens
x1^2
x1*y1
"""


def test_parse_and_print():
    I = bg.parse_ideal(CURVE)
    assert I.ring == (3, 2)
    assert len(I.generators) == 2
    # printed form parses back to the same generators
    J = bg.parse_ideal(str(I))
    assert J.generators == I.generators


def test_groebner_and_initial_ideal():
    M = bg.initial_ideal(bg.parse_ideal(MICRO))
    assert M.min_gens == ["x1^2", "x1*y1"]
    assert M.is_biborel()
    assert M.hilbert_function(2, 0) == 2  # x0^2, x0*x1


def test_saturation_and_curve_numbers():
    J = bg.saturate(bg.parse_ideal(CURVE), by="b")
    B = bg.bigin(J, order="x<y", seed=42)
    assert B.xtor() == 8
    assert B.ytor() != 3


def test_xreg_and_certificates():
    M = bg.initial_ideal(bg.parse_ideal(MICRO))
    r = M.xreg()
    assert r.minimal_elements == [(2, 0)]
    assert r.contains(2, 0) and not r.contains(1, 0)
    assert M.generator_at(2, 0)
    assert not M.generator_at(3, 0)


def test_reg_empty_and_errors():
    mxmy = bg.parse_ideal("ring x 2 y 2\ngens\nx0\nx1\ny0\ny1\n")
    assert bg.is_empty_variety(mxmy)
    r = bg.reg_empty(mxmy)
    assert sorted(r.minimal_elements) == [(0, 1), (1, 0)]

    try:
        bg.parse_ideal("ring x 2 y 2\ngens\nx0^\n")
    except bg.ParseError:
        pass
    else:
        raise AssertionError("expected ParseError")

    try:
        bg.reg_empty(bg.parse_ideal("ring x 2 y 2\ngens\nx0*y0\n"))
    except bg.ContractError:
        pass
    else:
        raise AssertionError("expected ContractError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            fn()
            print(name, "ok")
    print("python smoke tests passed")
