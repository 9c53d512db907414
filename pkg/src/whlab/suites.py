"""Certification suites run by the command line front end.

Each suite returns a :class:`VerificationReport`; item names carry their
parameters so that reports from different instances can be merged.
Randomized checks draw from ``numpy.random.default_rng(seed)`` only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import coherent, mub, phase, twomode
from .fock import (AlgebraParams, build_ladder_ops, classify, f_values, fock_space,
                   verify_algebra)
from .report import VerificationReport

DEFAULT_TOL = 1e-10
DEFAULT_SEED = 42


@dataclass
class RunConfig:
    subcommand: str
    kappa: list[float] = field(default_factory=lambda: [0.0])
    phi: float = 0.0
    dim_or_trunc: int | None = None
    tol: float = DEFAULT_TOL
    seed: int = DEFAULT_SEED
    output: str = "text"
    out_path: str | None = None
    flavor: str = "II"
    z: list[complex] = field(default_factory=list)
    jmax: int | None = None
    csv_path: str | None = None
    grid: int | None = None

    def to_dict(self) -> dict:
        return {
            "subcommand": self.subcommand,
            "kappa": [float(k) for k in self.kappa],
            "phi": float(self.phi),
            "dim_or_trunc": self.dim_or_trunc,
            "tol": float(self.tol),
            "seed": int(self.seed),
            "output": self.output,
            "type": self.flavor,
            "z": [[float(c.real), float(c.imag)] for c in self.z],
            "jmax": self.jmax,
            "grid": self.grid,
        }


def _maxabs(m) -> float:
    m = np.asarray(m)
    return float(np.max(np.abs(m))) if m.size else 0.0


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _tag(p: AlgebraParams, size: int) -> str:
    ks = ",".join(_fmt(k) for k in p.kappas)
    return f"kappa=[{ks}] phi={_fmt(p.phi)} size={size}: "


# ---------------------------------------------------------------- algebra

def algebra_suite(p: AlgebraParams, trunc: int | None, tol: float) -> VerificationReport:
    space = fock_space(p, trunc)
    out = VerificationReport()
    out.extend(verify_algebra(p, space, tol), _tag(p, space.size))
    if p.r == 1:
        c = classify(p)
        if c.algebra_label == "su_2":
            out.add(_tag(p, space.size) + "su_2 dimension d = 2j+1",
                    abs(2 * c.spin_j + 1 - space.size), tol, "stated: 2 j kappa = -1")
        elif c.algebra_label == "su_1_1":
            out.add(_tag(p, space.size) + "su_1_1 Bargmann index 2 k kappa = 1",
                    abs(2 * c.bargmann_k * p.kappas[0] - 1), tol, "stated: 2 k kappa = 1")
    return out


# ------------------------------------------------------------------ phase

def finite_phase_suite(p: AlgebraParams, tol: float, rng: np.random.Generator,
                       n_times: int = 20) -> VerificationReport:
    space = fock_space(p)
    d = space.size
    tag = _tag(p, d)
    out = VerificationReport()
    E = phase.build_unitary_phase_op(p, space)
    am, _, _ = build_ladder_ops(p, space)
    sqrtF = np.diag(np.sqrt(f_values(p, space)[:-1]))
    out.add(tag + "E_d unitary", _maxabs(E.conj().T @ E - np.eye(d)), tol,
            "stated: E_d unitary")
    out.add(tag + "a- = E_d sqrt(F(N))", _maxabs(am - E @ sqrtF), tol,
            "stated: a- = E sqrt(F(N))")

    M = phase.m_state_matrix(p, space)
    omega = np.exp(2j * np.pi * np.arange(d) / d)
    out.add(tag + "E_d eigen-residual |phi,m>", _maxabs(E @ M - M * omega), tol,
            "stated: E_d|phi,m> = e^{2 pi i m/d}|phi,m>")
    out.add(tag + "orthonormality <phi,m|phi,m'>", _maxabs(M.conj().T @ M - np.eye(d)), tol,
            "stated: <phi,m|phi,m'> = delta")
    out.add(tag + "closure sum_m |phi,m><phi,m| = I", phase.closure_m(p, space), tol,
            "stated: closure over m")
    out.add(tag + "equiprobability |<n|phi,m>| = 1/sqrt(d)",
            _maxabs(np.abs(M) - 1 / math.sqrt(d)), tol, "stated: equiprobability")

    G = phase.build_G_op(p, space)
    Mu = phase.mu_state_matrix(p, space)
    out.add(tag + "G_d eigen-residual |phi,mu>", _maxabs(G @ Mu - Mu * omega), tol,
            "stated: G_d|phi,mu> = e^{2 pi i mu/d}|phi,mu>")

    dev_m = dev_mu = 0.0
    for t in rng.uniform(-2 * np.pi, 2 * np.pi, n_times):
        U = phase.time_evolution(p, space, t)
        shifted = p.with_phi(p.phi + t)
        m = int(rng.integers(d))
        dev_m = max(dev_m, float(np.linalg.norm(
            U @ M[:, m] - phase.m_phase_state(shifted, m, space).vector)))
        dev_mu = max(dev_mu, float(np.linalg.norm(
            U @ Mu[:, m] - phase.mu_phase_state(shifted, m, space).vector)))
    out.add(tag + "temporal stability |phi,m>", dev_m, tol, "stated: temporally stable")
    out.add(tag + "temporal stability |phi,mu>", dev_mu, tol, "stated: temporally stable")
    return out


def truncated_phase_suite(p: AlgebraParams, s: int, tol: float, rng: np.random.Generator,
                          grid: int | None = None, closure_tol: float = 1e-8,
                          n_samples: int = 5) -> VerificationReport:
    space = fock_space(p, s)
    tag = _tag(p, s)
    out = VerificationReport()
    E = phase.build_shift_phase_op(p, space)
    am, _, _ = build_ladder_ops(p, space)
    sqrtF = np.diag(np.sqrt(f_values(p, space)[:-1]))
    eye = np.eye(s)
    p0 = np.zeros((s, s))
    p0[0, 0] = 1
    ptop = np.zeros((s, s))
    ptop[-1, -1] = 1
    out.add(tag + "shift E^dagger E = I - |0><0|", _maxabs(E.conj().T @ E - (eye - p0)), tol,
            "stated: E E^dagger = E^dagger E + |0><0| = I")
    out.add(tag + "shift E E^dagger = I - |s-1><s-1|", _maxabs(E @ E.conj().T - (eye - ptop)),
            tol, "derived: truncation of E E^dagger = I")
    out.add(tag + "a- = E sqrt(F(N)) (shift)", _maxabs(am - E @ sqrtF), tol,
            "stated: a- = E sqrt(F(N))")

    dev_theta = dev_time = 0.0
    for _ in range(n_samples):
        th = float(rng.uniform(-np.pi, np.pi))
        v = phase.theta_phase_state(p, th, space).vector
        dev_theta = max(dev_theta, _maxabs((E @ v - np.exp(1j * th) * v)[: s - 1]))
        t = float(rng.uniform(-2 * np.pi, 2 * np.pi))
        moved = phase.theta_phase_state(p.with_phi(p.phi + t), th, space).vector
        dev_time = max(dev_time, _maxabs(phase.time_evolution(p, space, t) @ v - moved))
    out.add(tag + "shift eigen-residual |phi,theta> (n < s-1)", dev_theta, tol,
            "stated: E|phi,theta> = e^{i theta}|phi,theta>")
    out.add(tag + "temporal stability |phi,theta>", dev_time, tol, "stated: temporally stable")

    grid = 4 * s if grid is None else grid
    out.add(tag + f"theta closure (trapezoid, grid={grid})",
            phase.closure_theta(p, space, grid), closure_tol,
            "stated: int |phi,theta><phi,theta| dtheta = 2 pi I")

    Es = phase.build_unitary_phase_op(p, space)
    M = phase.m_state_matrix(p, space)
    omega = np.exp(2j * np.pi * np.arange(s) / s)
    out.add(tag + "E_s unitary", _maxabs(Es.conj().T @ Es - eye), tol, "derived: truncated E_s")
    out.add(tag + "a- = E_s sqrt(F(N))", _maxabs(am - Es @ sqrtF), tol,
            "stated: a- = E sqrt(F(N))")
    out.add(tag + "E_s eigen-residual", _maxabs(Es @ M - M * omega), tol,
            "derived: truncated E_s")
    return out


# -------------------------------------------------------------------- mub

def mub_suite(d: int, tol: float, ortho_tol: float = 1e-12,
              cross_tol: float = 1e-12) -> tuple[VerificationReport, mub.MubReport]:
    rep = mub.complete_mub_set(d, tol)
    tag = f"d={d}: "
    out = VerificationReport()
    out.add(tag + "number of bases = d+1", abs(rep.n_bases - (d + 1)), 0.5, "stated: d+1 bases")
    if rep.prime:
        out.add(tag + "pairwise unbiasedness", rep.max_deviation, tol,
                "stated: complete set of d+1 MUBs for prime d")
    else:
        # composite d: recorded, never asserted
        out.add(tag + "pairwise unbiasedness (composite d, not asserted)",
                rep.max_deviation, 1.0, "derived: recorded only")
    ortho = 0.0
    cross = 0.0
    kappa = -1.0 / (d - 1)
    for a in range(d):
        B = mub.quantized_basis(d, a)
        ortho = max(ortho, _maxabs(B.vectors.conj() @ B.vectors.T - np.eye(d)))
        p = AlgebraParams((kappa,), mub.quantize_phi(d, a))
        cross = max(cross, _maxabs(B.matrix - phase.m_state_matrix(p, fock_space(p))))
    out.add(tag + "quantized bases orthonormal", ortho, ortho_tol, "derived: Gram matrix")
    dft = np.exp(2j * np.pi * np.outer(np.arange(d), np.arange(d)) / d) / math.sqrt(d)
    out.add(tag + "a=0 is the ordinary DFT", _maxabs(mub.quantized_basis(d, 0).matrix - dft),
            ortho_tol, "stated: a = 0 is the ordinary DFT")
    out.add(tag + "quantized basis = phase states at kappa=-1/(d-1)", cross, cross_tol,
            "stated: phi = -pi (d-1) a/d")
    return out, rep


# --------------------------------------------------------------- coherent

def sample_z(p: AlgebraParams, rng: np.random.Generator, n: int, zmax: float = 2.0) -> list[complex]:
    """Random z with |z| <= zmax, shrunk to 0.8/sqrt(kappa) for kappa > 0."""
    if p.r == 1 and p.kappas[0] > 0:
        zmax = min(zmax, 0.8 / math.sqrt(p.kappas[0]))
    r = zmax * np.sqrt(rng.uniform(0, 1, n))
    return [complex(x) for x in r * np.exp(1j * rng.uniform(-np.pi, np.pi, n))]


def coherent_suite(p: AlgebraParams, trunc: int | None, flavor: str, zs: list[complex],
                   tol: float, rng: np.random.Generator,
                   exact_tol: float = 1e-12) -> VerificationReport:
    space = fock_space(p, trunc)
    tag = _tag(p, space.size)
    out = VerificationReport()
    if flavor == "I":
        dev = max(coherent.kp_exponential_check(p, z, space) for z in zs)
        prov = "stated: |z> = exp(z a+)|0>"
        if not space.is_finite and p.kappas[0] > 0:
            prov += "; derived: domain |z| < 1/sqrt(kappa)"
        out.add(tag + "type I = exp(z a+)|0>", dev, tol, prov)
    elif space.is_finite:
        cert = coherent.bg_finite_nonexistence(p, space, seed=int(rng.integers(2**31)))
        out.add(tag + "(a-)^d = 0", cert.power_max_abs, tol, "stated: (a-)^d = 0")
        out.add(tag + "a- null space dimension = 1", abs(cert.null_space_dim - 1), 0.5,
                "derived: nilpotent a-")
        # pass iff every sampled residual clears 1e-3
        out.add(tag + "no type II eigenvector for z != 0 (1e-3 - min residual)",
                max(0.0, 1e-3 - cert.min_residual), tol,
                "stated: no Barut-Girardello states for complex z in finite dimension")
        st = coherent.grassmann_bg_state(p, space)
        out.add(tag + "Grassmann a-|theta> = theta|theta>",
                coherent.grassmann_eigen_check(p, st), exact_tol,
                "stated: a-|theta,phi> = theta|theta,phi>")
    else:
        dev = 0.0
        for z in zs:
            st = coherent.bg_state(p, z, space)
            dev = max(dev, coherent.bg_eigen_check(p, st))
        out.add(tag + "type II a-|z> = z|z> (n < s-1)", dev, tol, "stated: a-|z> = z|z>")
    if all(k == 0 for k in p.kappas) and not space.is_finite:
        dev = max(_maxabs(coherent.kp_state(p, z, space).vector
                          - coherent.bg_state(p, z, space).vector) for z in zs)
        out.add(tag + "Glauber coincidence type I = type II", dev, exact_tol,
                "stated: types I and II agree iff all kappa = 0")
    return out


# ---------------------------------------------------------------- twomode

def twomode_suite(kappa: float, jmax: int | None, tol: float) -> VerificationReport:
    space = twomode.two_mode_space(kappa, jmax)
    ops = twomode.build_two_mode_ops(kappa, space)
    tag = f"kappa={_fmt(kappa)} jmax={space.jmax} [{twomode.classify_two_mode(kappa)}]: "
    out = VerificationReport()
    out.extend(twomode.verify_two_mode_algebra(ops, kappa, tol), tag)
    out.add(tag + "space size (jmax+1)(jmax+2)/2",
            abs(len(space.labels) - (space.jmax + 1) * (space.jmax + 2) // 2), 0.5,
            "derived: triangle count")
    if kappa < 0:
        out.add(tag + "boundary annihilation a_i+ on n1+n2 = jmax",
                twomode.boundary_annihilation(ops), tol, "derived: F_i vanishes past jmax")
    return out


# -------------------------------------------------------------------- all

ALGEBRA_CASES = [(0.0,), (0.5,), (1.0,), (-1.0,), (-0.5,), (-1 / 3,), (0.5, 1.0), (-1 / 3, 0.25)]
PHASE_DIMS = (2, 3, 4, 5, 8)
PRIMES = (2, 3, 5, 7, 11)


def run_all(tol: float, seed: int) -> VerificationReport:
    """Every battery at desk scale with fixed parameter sets."""
    rng = np.random.default_rng(seed)
    out = VerificationReport()
    for ks in ALGEBRA_CASES:
        p = AlgebraParams(ks, float(rng.uniform(-np.pi, np.pi)))
        out.extend(algebra_suite(p, None if p.finite else 16, tol), "algebra ")
    for d in PHASE_DIMS:
        for _ in range(5):
            p = AlgebraParams((-1.0 / (d - 1),), float(rng.uniform(-np.pi, np.pi)))
            out.extend(finite_phase_suite(p, tol, rng), "phase ")
    for ks in ((0.0,), (0.5,), (1.0,)):
        for s in (4, 8, 16):
            p = AlgebraParams(ks, float(rng.uniform(-np.pi, np.pi)))
            out.extend(truncated_phase_suite(p, s, tol, rng), "phase-trunc ")
    for d in PRIMES:
        out.extend(mub_suite(d, tol)[0], "mub ")
    for d in (2, 3, 4, 6):
        p = AlgebraParams((-1.0 / (d - 1),), float(rng.uniform(-np.pi, np.pi)))
        out.extend(coherent_suite(p, None, "I", sample_z(p, rng, 5), tol, rng), "coherent ")
        out.extend(coherent_suite(p, None, "II", [], tol, rng), "coherent ")
    for ks in ((0.0,), (0.25,)):
        p = AlgebraParams(ks, float(rng.uniform(-np.pi, np.pi)))
        zs = sample_z(p, rng, 5)
        out.extend(coherent_suite(p, 40, "I", zs, tol, rng), "coherent ")
        out.extend(coherent_suite(p, 40, "II", zs, tol, rng), "coherent ")
    for k in (-1.0, -0.5, -1 / 3):
        out.extend(twomode_suite(k, None, tol), "twomode ")
    for k in (0.0, 0.5, 1.0):
        out.extend(twomode_suite(k, 8, tol), "twomode ")
    return out
