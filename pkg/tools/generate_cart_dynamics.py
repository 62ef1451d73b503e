#!/usr/bin/env python3
"""Derive the cart double-pendulum equations of motion and emit fast numeric code.

Run from the repository root:

    python tools/generate_cart_dynamics.py

Writes ``src/fimax/_cart_dynamics.py``.  The generated module evaluates the
joint angular accelerations together with their first and second partial
derivatives with respect to (phi1, phi2, dphi1, dphi2, u, m1, m2, c) as flat
float arithmetic (common subexpressions eliminated), which keeps the hot
integration loops fast.  The committed output is gated by the
finite-difference validator in ``fimax.model``.

Conventions
-----------
* phi1 is the absolute angle of the top link from the hanging equilibrium;
  phi2 is the angle of the bottom link relative to the top link.
* The cart acceleration is the control: xdd = u.
* Joint friction enters as a generalized force -c*dphi_i at each joint
  (c here is the SI torque coefficient; unit scaling happens in the wrapper).
* Pivot-to-pivot distance along link 1 is L1 - 2*offset (a bearing sits
  inset from each link edge); link inertia about its center of mass is the
  uniform-plate value m*(L**2 + w**2)/12, which keeps both kinetic and
  potential terms proportional to the link mass.
"""

import pathlib

import sympy as sp

HEADER = '''"""Cart double-pendulum dynamics kernels (machine-generated).

Generated by tools/generate_cart_dynamics.py -- do not edit by hand.
Variable order for derivative arrays: (phi1, phi2, dphi1, dphi2, u, m1, m2, c).
``geom`` is the tuple (L1, L2, w1, w2, offset, s1, s2, gravity).
"""

import math

import numpy as np

'''


def build_expressions():
    t = sp.Symbol("t")
    xc = sp.Function("xc")(t)
    p1 = sp.Function("p1")(t)
    p2 = sp.Function("p2")(t)

    m1, m2, c = sp.symbols("m1 m2 c", positive=True)
    L1, L2, w1, w2, off, s1, s2, grav = sp.symbols(
        "L1 L2 w1 w2 off s1 s2 grav", positive=True
    )
    u = sp.Symbol("u")

    d1 = L1 - 2 * off  # pivot-to-pivot distance along link 1
    I1 = m1 * (L1**2 + w1**2) / 12
    I2 = m2 * (L2**2 + w2**2) / 12

    # Center-of-mass positions, y up, links hanging below the cart.
    x1 = xc + s1 * sp.sin(p1)
    y1 = -s1 * sp.cos(p1)
    x2 = xc + d1 * sp.sin(p1) + s2 * sp.sin(p1 + p2)
    y2 = -d1 * sp.cos(p1) - s2 * sp.cos(p1 + p2)

    T = (
        m1 * (x1.diff(t) ** 2 + y1.diff(t) ** 2)
        + I1 * p1.diff(t) ** 2
        + m2 * (x2.diff(t) ** 2 + y2.diff(t) ** 2)
        + I2 * (p1.diff(t) + p2.diff(t)) ** 2
    ) / 2
    V = grav * (m1 * y1 + m2 * y2)
    Lag = T - V

    # Euler-Lagrange residuals with viscous joint damping.
    eq1 = sp.diff(sp.diff(Lag, p1.diff(t)), t) - sp.diff(Lag, p1) + c * p1.diff(t)
    eq2 = sp.diff(sp.diff(Lag, p2.diff(t)), t) - sp.diff(Lag, p2) + c * p2.diff(t)

    phi1, phi2, dphi1, dphi2, ddphi1, ddphi2, dxc = sp.symbols(
        "phi1 phi2 dphi1 dphi2 ddphi1 ddphi2 dxc"
    )
    subs = {
        xc.diff(t, 2): u,
        p1.diff(t, 2): ddphi1,
        p2.diff(t, 2): ddphi2,
        xc.diff(t): dxc,
        p1.diff(t): dphi1,
        p2.diff(t): dphi2,
        p1: phi1,
        p2: phi2,
    }
    eq1 = sp.expand(eq1.subs(subs))
    eq2 = sp.expand(eq2.subs(subs))

    M, rhs = sp.linear_eq_to_matrix([eq1, eq2], [ddphi1, ddphi2])
    alpha = M.LUsolve(rhs)
    alpha = sp.Matrix([sp.cancel(sp.together(a)) for a in alpha])

    # The prescribed-acceleration cart decouples the cart velocity.
    assert dxc not in alpha.free_symbols, "cart velocity failed to cancel"

    dyn_vars = (phi1, phi2, dphi1, dphi2, u, m1, m2, c)
    geom_vars = (L1, L2, w1, w2, off, s1, s2, grav)

    energy = (
        sp.expand(T.subs(subs)),
        sp.expand(V.subs(subs)),
    )
    return alpha, dyn_vars, geom_vars, (phi1, phi2, dphi1, dphi2, dxc, m1, m2), energy


def emit_function(name, args, assigns, tail, out):
    out.append(f"def {name}({', '.join(args)}):")
    out.append("    L1, L2, w1, w2, off, s1, s2, grav = geom")
    for lhs, rhs in assigns:
        out.append(f"    {lhs} = {rhs}")
    out.extend("    " + line for line in tail)
    out.append("")
    out.append("")


def pycode(expr):
    return sp.pycode(expr)


def main():
    alpha, dyn_vars, geom_vars, energy_vars, energy = build_expressions()
    nv = len(dyn_vars)

    print("differentiating...")
    d1 = [[sp.diff(alpha[i], v) for v in dyn_vars] for i in range(2)]
    d2 = [
        [[sp.diff(d1[i][k], dyn_vars[l]) if l >= k else None for l in range(nv)]
         for k in range(nv)]
        for i in range(2)
    ]

    out = [HEADER]

    # -- accelerations only ------------------------------------------------
    print("cse: accel...")
    reps, red = sp.cse(list(alpha), symbols=sp.numbered_symbols("t"))
    assigns = [(str(s), pycode(e)) for s, e in reps]
    tail = [f"return np.array([{pycode(red[0])}, {pycode(red[1])}])"]
    emit_function(
        "cart_accel",
        ["phi1", "phi2", "dphi1", "dphi2", "u", "m1", "m2", "c", "geom"],
        assigns,
        tail,
        out,
    )

    # -- accelerations + first derivatives ---------------------------------
    print("cse: accel + d1...")
    exprs = list(alpha) + [d1[i][k] for i in range(2) for k in range(nv)]
    reps, red = sp.cse(exprs, symbols=sp.numbered_symbols("t"))
    assigns = [(str(s), pycode(e)) for s, e in reps]
    tail = [f"alpha = np.array([{pycode(red[0])}, {pycode(red[1])}])"]
    rows = []
    for i in range(2):
        rows.append("[" + ", ".join(pycode(red[2 + i * nv + k]) for k in range(nv)) + "]")
    tail.append(f"d1 = np.array([{rows[0]}, {rows[1]}])")
    tail.append("return alpha, d1")
    emit_function(
        "cart_accel_d1",
        ["phi1", "phi2", "dphi1", "dphi2", "u", "m1", "m2", "c", "geom"],
        assigns,
        tail,
        out,
    )

    # -- accelerations + first + second derivatives ------------------------
    print("cse: accel + d1 + d2...")
    exprs = list(alpha) + [d1[i][k] for i in range(2) for k in range(nv)]
    index = []
    for i in range(2):
        for k in range(nv):
            for l in range(k, nv):
                if d2[i][k][l] != 0:
                    index.append((i, k, l))
                    exprs.append(d2[i][k][l])
    reps, red = sp.cse(exprs, symbols=sp.numbered_symbols("t"))
    assigns = [(str(s), pycode(e)) for s, e in reps]
    tail = [f"alpha = np.array([{pycode(red[0])}, {pycode(red[1])}])"]
    rows = []
    for i in range(2):
        rows.append("[" + ", ".join(pycode(red[2 + i * nv + k]) for k in range(nv)) + "]")
    tail.append(f"d1 = np.array([{rows[0]}, {rows[1]}])")
    tail.append(f"d2 = np.zeros((2, {nv}, {nv}))")
    base = 2 + 2 * nv
    for pos, (i, k, l) in enumerate(index):
        expr_code = pycode(red[base + pos])
        if k == l:
            tail.append(f"d2[{i}, {k}, {k}] = {expr_code}")
        else:
            tail.append(f"d2[{i}, {k}, {l}] = d2[{i}, {l}, {k}] = {expr_code}")
    tail.append("return alpha, d1, d2")
    emit_function(
        "cart_core",
        ["phi1", "phi2", "dphi1", "dphi2", "u", "m1", "m2", "c", "geom"],
        assigns,
        tail,
        out,
    )

    # -- energies -----------------------------------------------------------
    print("cse: energy...")
    reps, red = sp.cse(list(energy), symbols=sp.numbered_symbols("t"))
    assigns = [(str(s), pycode(e)) for s, e in reps]
    tail = [f"return {pycode(red[0])}, {pycode(red[1])}"]
    emit_function(
        "cart_energy",
        ["phi1", "phi2", "dphi1", "dphi2", "dxc", "m1", "m2", "geom"],
        assigns,
        tail,
        out,
    )

    target = pathlib.Path(__file__).resolve().parents[1] / "src" / "fimax" / "_cart_dynamics.py"
    target.write_text("\n".join(out).rstrip() + "\n")
    print(f"wrote {target}")

    # Self-check the emitted module against sympy at a random-ish point.
    import importlib.util

    spec = importlib.util.spec_from_file_location("_cart_dynamics", target)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)

    point = (0.3, -0.7, 1.1, -2.3, 0.8, 0.085, 0.0847, 5.0e-4)
    geom = (0.305, 0.305, 0.0445, 0.0381, 0.0127, 0.146, 0.125, 9.81)
    sub = {**dict(zip(dyn_vars, point)), **dict(zip(geom_vars, geom))}

    a_sym = [float(alpha[i].subs(sub)) for i in range(2)]
    a_num, d1_num, d2_num = mod.cart_core(*point, geom)
    for i in range(2):
        assert abs(a_num[i] - a_sym[i]) < 1e-10 * max(1.0, abs(a_sym[i])), (i, a_num[i], a_sym[i])
        for k in range(nv):
            ref = float(d1[i][k].subs(sub))
            assert abs(d1_num[i, k] - ref) < 1e-9 * max(1.0, abs(ref)), (i, k)
            for l in range(k, nv):
                ref2 = float(d2[i][k][l].subs(sub)) if d2[i][k][l] != 0 else 0.0
                assert abs(d2_num[i, k, l] - ref2) < 1e-8 * max(1.0, abs(ref2)), (i, k, l)
    print("self-check passed")


if __name__ == "__main__":
    main()
