"""End-to-end canonical decomposition and the trichotomy classifier."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import kernels
from .automorphisms import canonical_labeling
from .errors import ClassificationError
from .graph import Graph
from .minors import is_minor
from .nested import OrientedStar, TorsoBundle, splitting_stars, torsos
from .recognition import (
    is_quasi_4_connected,
    is_internally_4_connected,
    recognize_generalised_wheel,
    recognize_k3m,
    recognize_thickened_k3m,
    recognize_wheel,
)
from .separations import MixedSeparation, separation_sort_key
from .triseps import analyze, require_three_connected


@dataclass(frozen=True)
class TorsoClass:
    tag: str  # quasi-4-connected | K4 | K3 | wheel | thickened-K3m | whole-graph-K3m
    interlace: str  # none | light | heavy
    m: int | None = None
    rim: tuple | None = None
    bipartition: tuple | None = None
    witness: MixedSeparation | None = None
    generalised_wheel: object | None = None


def _le(a1, b1, a2, b2):
    return (a1 & ~a2) == 0 and (b2 & ~b1) == 0


def _interlacers(g, star_pairs, context_pairs):
    """Context pairs strictly above every star member in some orientation."""
    out = []
    for a, b in context_pairs:
        ok = True
        for ca, cb in star_pairs:
            fwd = _le(ca, cb, a, b) and (ca, cb) != (a, b)
            bwd = _le(ca, cb, b, a) and (ca, cb) != (b, a)
            if not (fwd or bwd):
                ok = False
                break
        if ok:
            out.append((a, b))
    return out


def _star_interlace(g, star, ana):
    """(tag, witness pair) scanning all strong nontrivial tri-separations."""
    star_pairs = [
        (g.mask_of(s.side_a), g.mask_of(s.side_b)) for s in star.members
    ]
    context = [
        p
        for i, p in enumerate(ana.pairs)
        if ana.tri[i] and ana.strong[i] and ana.nontrivial[i]
    ]
    adj = g.adj_masks
    heavy = light = None
    for a, b in _interlacers(g, star_pairs, context):
        ca = kernels.component_count(adj, a & ~b)
        cb = kernels.component_count(adj, b & ~a)
        if ca >= 2 and cb >= 2:
            light = light or (a, b)
        else:
            heavy = heavy or (a, b)
        if heavy and light:
            break
    if heavy:
        return "heavy", heavy
    if light:
        return "light", light
    return "none", None


def classify_torso(bundle, interlace, g, witness=None):
    """Classify a compressed torso against its interlace kind.

    Raises ClassificationError with a structured report when the torso does
    not fit the expected bucket; this is the falsification channel.
    """
    comp = bundle.compressed

    def fail(msg):
        raise ClassificationError(
            msg,
            report={
                "graph_edges": sorted(g.edges),
                "star": [
                    (sorted(s.side_a), sorted(s.side_b)) for s in bundle.star.members
                ],
                "compressed_edges": sorted(comp.edges),
                "interlace": interlace,
            },
        )

    if interlace == "light":
        ok, m, tri = recognize_thickened_k3m(comp)
        if ok:
            return TorsoClass(
                tag="thickened-K3m", interlace=interlace, m=m,
                bipartition=tri, witness=witness,
            )
        ok, m, tri = recognize_k3m(g)
        if ok and comp == g:
            return TorsoClass(
                tag="whole-graph-K3m", interlace=interlace, m=m,
                bipartition=tri, witness=witness,
            )
        fail("lightly interlaced torso is not a thickened K3m and G is not K3m")
    if interlace == "heavy":
        # The expanded torso is a generalised wheel; compressing contracts
        # every separator edge, including those on the rim, so the compressed
        # torso is a wheel whose rim may have shrunk down to a triangle.
        gok, gdata = recognize_generalised_wheel(bundle.expanded)
        if not gok:
            fail("expanded torso of a heavily interlaced star is not a generalised wheel")
        ok, hub, rim = recognize_wheel(comp)
        if ok:
            tag = "K4" if comp.n == 4 else "wheel"
            return TorsoClass(
                tag=tag, interlace=interlace, rim=rim, witness=witness,
                generalised_wheel=gdata,
            )
        if comp.n == 3 and comp.m == 3:
            return TorsoClass(
                tag="K3", interlace=interlace, witness=witness,
                generalised_wheel=gdata,
            )
        fail("heavily interlaced torso is neither a wheel nor a collapsed-rim K3")
    # not interlaced by any strong nontrivial tri-separation
    if comp.n == 3 and comp.m == 3:
        return TorsoClass(tag="K3", interlace=interlace)
    if comp.n == 4 and comp.m == 6:
        return TorsoClass(tag="K4", interlace=interlace)
    if is_quasi_4_connected(comp):
        return TorsoClass(tag="quasi-4-connected", interlace=interlace)
    fail("non-interlaced torso is not quasi 4-connected, K4 or K3")


@dataclass
class DecomposedStar:
    star: OrientedStar
    bundle: TorsoBundle
    torso_class: TorsoClass
    compressed_minor: object | None = None
    expanded_minor: object | None = None


@dataclass
class DecompositionResult:
    graph: Graph
    n_family: tuple
    stars: tuple  # of DecomposedStar
    digest: str


def canonical_digest(g, n_family):
    """Hash of the canonically relabeled nested family; invariant under
    vertex relabelings of g."""
    lab = canonical_labeling(g)
    payload = sorted(
        (sorted(lab[v] for v in s.side_a), sorted(lab[v] for v in s.side_b))
        for s in n_family
    )
    blob = json.dumps(payload, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def decompose(g, minor_certificates=True):
    """Canonical decomposition of a 3-connected graph along its
    totally-nested nontrivial tri-separations."""
    require_three_connected(g)
    ana = analyze(g)
    n_family = [ana.separation(p) for p in ana.n_pairs()]
    n_family.sort(key=lambda s: separation_sort_key(g, s))
    stars = splitting_stars(n_family) if n_family else splitting_stars([])
    decomposed = []
    for star in stars:
        bundle = torsos(g, star)
        tag, witness_pair = _star_interlace(g, star, ana)
        witness = ana.separation(witness_pair) if witness_pair else None
        cls = classify_torso(bundle, tag, g, witness=witness)
        dstar = DecomposedStar(star=star, bundle=bundle, torso_class=cls)
        if minor_certificates and g.n <= 8:
            dstar.compressed_minor = is_minor(bundle.compressed, g)
            dstar.expanded_minor = is_minor(bundle.expanded, g)
            if not (
                dstar.compressed_minor.status == "minor"
                and dstar.expanded_minor.status == "minor"
            ):
                raise ClassificationError(
                    "torso failed its minor certificate",
                    report={"star": star, "graph": sorted(g.edges)},
                )
        decomposed.append(dstar)
    return DecompositionResult(
        graph=g,
        n_family=tuple(n_family),
        stars=tuple(decomposed),
        digest=canonical_digest(g, n_family),
    )


ANGRY_NESTED = "has-totally-nested-nontrivial"
ANGRY_WHEEL_K3M = "wheel-or-K3m"
ANGRY_INTERNALLY4 = "internally-4-connected"


@dataclass(frozen=True)
class AngryResult:
    outcome: str
    flags: tuple  # (nested, wheel_or_k3m, internally_4)
    witness: object = None


def angry_classify(g):
    """Exactly one of: g has a totally-nested nontrivial tri-separation;
    g is a wheel or K_{3,m} (m >= 3); g is internally 4-connected."""
    require_three_connected(g)
    ana = analyze(g)
    n_pairs = ana.n_pairs()
    has_nested = bool(n_pairs)
    wheel_ok, hub, rim = recognize_wheel(g)
    k3m_ok, m, _ = recognize_k3m(g)
    wheel_or_k3m = wheel_ok or (k3m_ok and m >= 3)
    internally4 = is_internally_4_connected(g)
    flags = (has_nested, wheel_or_k3m, internally4)
    if sum(flags) != 1:
        raise ClassificationError(
            f"trichotomy failure: flags={flags}",
            report={"graph": sorted(g.edges), "flags": flags},
        )
    if has_nested:
        return AngryResult(ANGRY_NESTED, flags, ana.separation(n_pairs[0]))
    if wheel_or_k3m:
        return AngryResult(ANGRY_WHEEL_K3M, flags, hub if wheel_ok else m)
    return AngryResult(ANGRY_INTERNALLY4, flags)
