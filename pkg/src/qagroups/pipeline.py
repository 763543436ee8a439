"""End-to-end certification run for one structure.

Order: validate, prune, factor property, coverage of K, length ratio,
departure table, departure check, then geometry on the pruned structure.
A failed validation or an exception stops the run; other failures are
collected and the run continues.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import automata as fa
from .departure import departure_function, verify_departure, verify_length_ratio
from .geometry import check_lipschitz_hausdorff, check_weak_lipschitz, weak_implies_hausdorff_check
from .pruning import PruningError, prune_structure, verify_factor_property, verify_K_dictionary
from .report import FAIL, PASS, Report
from .structure import QuasiAutomaticStructure, restrict_to, validate


@dataclass
class PipelineReport:
    structure: str
    options: dict
    stages: list = field(default_factory=list)
    constants: dict = field(default_factory=dict)
    stopped: str | None = None

    @property
    def verdict(self) -> str:
        if self.stopped:
            return FAIL
        return PASS if all(r.ok for r in self.stages) else FAIL

    @property
    def ok(self) -> bool:
        return self.verdict == PASS

    def stage(self, name: str) -> Report:
        for r in self.stages:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"structure": self.structure, "options": self.options,
                "constants": self.constants, "verdict": self.verdict, "stopped": self.stopped,
                "stages": [r.to_dict() for r in self.stages]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def render(self) -> str:
        lines = [f"structure: {self.structure or '(unnamed)'}",
                 "options: " + " ".join(f"{k}={v}" for k, v in self.options.items())]
        if self.constants:
            lines.append("constants: " + " ".join(f"{k}={v}" for k, v in self.constants.items()))
        lines += [r.render("  ") for r in self.stages]
        if self.stopped:
            lines.append(f"stopped: {self.stopped}")
        lines.append(f"overall: {self.verdict}")
        return "\n".join(lines)


def prove(s: QuasiAutomaticStructure, max_len: int = 5, ball: int = 3, word_cap: int = 8,
          depth_cap: int = 12) -> PipelineReport:
    rep = PipelineReport(s.name, {"max_len": max_len, "ball": ball, "word_cap": word_cap,
                                  "depth_cap": depth_cap})
    o = s.oracle
    v = validate(s, max_len)
    rep.stages.append(v)
    if not v.ok:
        rep.stopped = "validation failed"
        return rep
    try:
        res = prune_structure(s)
    except PruningError as exc:
        rep.stages.append(Report("prune", FAIL, {"error": str(exc)}))
        rep.stopped = "pruning failed"
        return rep
    K_states = fa.trim(fa.minimize(res.K)).n_states
    rep.stages.append(Report("prune", PASS, {"k": res.k, "K_states": K_states,
                                             "debris": res.debris_sizes()}))
    rep.constants.update(k=res.k, K_states=K_states)
    ok = verify_factor_property(res)
    rep.stages.append(Report("verify_factor_property", PASS if ok else FAIL, {"k": res.k}))
    kd = verify_K_dictionary(res, o, ball, word_cap)
    rep.stages.append(kd)

    table = departure_function(res, o, ball, depth_cap)
    rep.constants.update(c=table.c, ell=table.ell, D=table.values())
    rep.stages.append(verify_length_ratio(res, table.ell, 2 * word_cap))
    rep.stages.append(table.report())
    for n in range(ball + 1):
        vd = verify_departure(res.K, o, table, n, word_cap)
        vd.name = f"verify_departure[n={n}]"
        rep.stages.append(vd)

    pruned = restrict_to(s, res.K, coverage_check=None)
    k_h, lh = check_lipschitz_hausdorff(pruned, max_len)
    rep.stages.append(lh)
    wl = check_weak_lipschitz(pruned, None, max_len)
    rep.stages.append(wl)
    k_w = wl.details["minimal_k"]
    rep.constants.update(k_hausdorff=k_h, k_weak=k_w)
    rep.stages.append(weak_implies_hausdorff_check(pruned, k_w, max_len))
    return rep
