"""End-to-end checks that two disjoint compacta with connected complements have a
connected joint complement, plus the seeded campaign runner."""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from ..constructions.neighborhood import build_neighborhood
from ..errors import DisjointnessError, PlanarTopoError
from ..geometry.cover import separate
from ..geometry.distance import set_distance
from ..geometry.parse import dump_scene_document
from ..geometry.raster import rasterize
from ..geometry.scene import Frame, Scene
from ..topology.certificates import Certificate, sphere_connected_complement
from ..topology.paths import PolyPath, deepest_escape_path
from .generate import GenParams, random_pair

FINAL_VERDICTS = ("pass", "precondition-violation", "defect", "undecided")


def certify_at(scene: Scene, frame: Frame) -> Certificate:
    """Outer certificate, falling back to the inner one when the outer is undecided."""
    cert = sphere_connected_complement(rasterize(scene, frame, "outer"))
    if cert.decided:
        return cert
    return sphere_connected_complement(rasterize(scene, frame, "inner"))


def union_frame(scenes, h: float) -> Frame:
    """Square frame tiled by ``h`` around all scenes with an 8-cell margin."""
    boxes = [s.bbox() for s in scenes if not s.is_empty]
    x0 = min(b[0] for b in boxes)
    y0 = min(b[1] for b in boxes)
    x1 = max(b[2] for b in boxes)
    y1 = max(b[3] for b in boxes)
    n = int(math.ceil((max(x1 - x0, y1 - y0) + 16 * h) / h))
    cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
    return Frame(cx - n * h / 2, cy - n * h / 2, cx + n * h / 2, cy + n * h / 2, h)


@dataclass(frozen=True)
class Entry:
    h: float
    k: Certificate
    l: Certificate
    kl: Optional[Certificate]

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "K": self.k.to_dict(),
            "L": self.l.to_dict(),
            "KL": None if self.kl is None else self.kl.to_dict(),
        }


@dataclass(frozen=True, eq=False)
class Report:
    verdict: str
    distance: float
    h0: float
    floor: float
    entries: tuple
    witness: Optional[PolyPath] = None
    neighborhoods: Optional[dict] = None
    timings: dict = field(default_factory=dict)

    @property
    def halvings(self) -> int:
        return len(self.entries) - 1

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "verdict": self.verdict,
            "distance": self.distance,
            "h0": self.h0,
            "floor": self.floor,
            "halvings": self.halvings,
            "entries": [e.to_dict() for e in self.entries],
            "witness": None if self.witness is None else self.witness.to_json(),
            "neighborhoods": self.neighborhoods,
        }
        if timings:
            out["timings"] = dict(self.timings)
        return out

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_dict(timings), indent=2) + "\n"


def _neighborhood_summary(k: Scene, a: Scene, floor: float) -> dict:
    try:
        res = build_neighborhood(k, a, floor=floor)
    except PlanarTopoError as exc:
        return {"status": "error", "error": type(exc).__name__}
    return {
        "status": res.status,
        "h": res.h,
        "rays": len(res.rays),
        "K_in_V": res.k_in_v,
        "V_in_A": res.v_in_a,
        "V_simply_connected": None if res.v_certificate is None else res.v_certificate.verdict,
    }


def verify_union(
    k: Scene,
    l: Scene,
    h0: Optional[float] = None,
    frame: Optional[Frame] = None,
    floor: Optional[float] = None,
    neighborhoods: bool = False,
) -> Report:
    """Certify K^c, L^c and (K u L)^c, halving h from ``h0`` until decided or ``floor``."""
    t_start = time.perf_counter()
    d = set_distance(k, l)
    if d <= 0:
        raise DisjointnessError("K and L touch or overlap")
    if frame is None:
        frame = union_frame((k, l), h0 if h0 is not None else 1.0)
        if h0 is None:
            frame = union_frame((k, l), frame.width / 256)
    elif h0 is not None:
        frame = frame.with_h(h0)
    h0 = frame.h
    if floor is None:
        floor = frame.width / 4096
    kl = k.union(l)
    entries = []
    verdict, witness = "undecided", None
    f = frame
    while True:
        ck, cl = certify_at(k, f), certify_at(l, f)
        ckl = None
        if "disconnected" in (ck.verdict, cl.verdict):
            entries.append(Entry(f.h, ck, cl, None))
            verdict = "precondition-violation"
            break
        ckl = certify_at(kl, f)
        entries.append(Entry(f.h, ck, cl, ckl))
        both = ck.verdict == cl.verdict == "connected"
        if both and ckl.verdict == "connected":
            verdict = "pass"
            witness = deepest_escape_path(rasterize(kl, f, "outer"))
            break
        if both and ckl.verdict == "disconnected":
            verdict = "defect"
            break
        if f.h / 2 < floor * (1 - 1e-9):
            break
        f = f.refined()
    t_certs = time.perf_counter()
    hoods = None
    if neighborhoods and verdict == "pass":
        a1, a2 = separate(k, l)
        hoods = {"K": _neighborhood_summary(k, a1, floor), "L": _neighborhood_summary(l, a2, floor)}
    t_end = time.perf_counter()
    timings = {"certificates_s": t_certs - t_start, "neighborhoods_s": t_end - t_certs}
    return Report(verdict, d, h0, floor, tuple(entries), witness, hoods, timings)


# -- campaign ----------------------------------------------------------------


def run_instance(args) -> dict:
    """One campaign instance; returns a JSON-ready record."""
    p, index = args
    try:
        k, l = random_pair(p, index)
    except PlanarTopoError as exc:
        return {"index": index, "verdict": "generation-error", "error": str(exc)}
    report = verify_union(k, l, frame=p.frame.with_h(p.frame.width / 256), floor=p.floor)
    rec = {"index": index, "verdict": report.verdict, "halvings": report.halvings}
    if report.verdict == "defect":
        rec["instance"] = dump_scene_document({"K": k, "L": l}, p.frame)
        rec["report"] = report.to_dict(timings=False)
    return rec


@dataclass(frozen=True)
class CampaignSummary:
    count: int
    counts: dict
    defects: tuple
    records: tuple

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "counts": dict(self.counts),
            "defects": list(self.defects),
            "verdicts": [r["verdict"] for r in self.records],
        }


def merge(records) -> CampaignSummary:
    """Order-independent reduction of instance records."""
    records = tuple(sorted(records, key=lambda r: r["index"]))
    counts = {v: 0 for v in FINAL_VERDICTS + ("generation-error",)}
    for r in records:
        counts[r["verdict"]] += 1
    defects = tuple(r for r in records if r["verdict"] == "defect")
    return CampaignSummary(len(records), counts, defects, records)


def fuzz_campaign(n: int, p: GenParams, workers: int = 1) -> CampaignSummary:
    if n < 1:
        raise ValueError("campaign needs at least one instance")
    jobs = [(p, i) for i in range(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_instance, jobs, chunksize=4))
    else:
        records = [run_instance(j) for j in jobs]
    return merge(records)
