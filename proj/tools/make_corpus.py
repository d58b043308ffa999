#!/usr/bin/env python3
"""Writes the scenario files of the golden corpus (modules come from `xmodcat catalog`)."""
import json
import subprocess
import sys
from pathlib import Path

exe, out = sys.argv[1], Path(sys.argv[2])
out.mkdir(parents=True, exist_ok=True)


def module(name):
    return json.loads(subprocess.check_output([exe, "catalog", name]))


def gm(group, gamma=None, act=None):
    m = {"group": {"name": group}}
    if gamma:
        m["gamma"] = {"name": gamma}
        m["act"] = act
    return m


def write(name, kind, inputs, expect=None, options=None):
    doc = {"schema_version": 1, "name": name, "kind": kind, "inputs": inputs}
    if expect:
        doc["expect"] = expect
    if options:
        doc["options"] = options
    (out / f"{name}.json").write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")


for n in ["S3/A3", "S3/A3+Z2", "Q8/<i>", "Q8/<i>+Z2", "D4/V4", "D4/V4+Z2"]:
    slug = n.replace("/", "_").replace("<", "").replace(">", "").replace("+", "_")
    write(f"validate-{slug}", "validate", {"module": module(n)})
    write(f"build-{slug}", "build-catgroup", {"module": module(n)})

broken = module("S3/A3")
broken["eta"][1][2] = (broken["eta"][1][2] + 1) % 3
write("validate-mutated-eta", "validate", {"module": broken}, expect={"validated": False})

write("check-axioms-random", "check-axioms", {"random": {"count": 60, "seed": 7, "max_order": 8}})
z2 = gm("Z2")
write("check-axioms-reduced-zero", "check-axioms", {"reduced": {"M": z2, "N": z2}})
write("check-axioms-reduced-braid", "check-axioms",
      {"reduced": {"M": z2, "N": z2, "values": {"braid": [0, 0, 0, 1]}}})
write("build-emit-Z2-Z4", "build-catgroup", {"module": module("Z2->Z4"), "emit_category": True})

write("factor-set-Q8_i_Z2", "factor-set", {"module": module("Q8/<i>+Z2")})
write("factor-set-Z2-V4-swap", "factor-set", {"module": module("Z2->V4(swap)")})

write("h2-Z2-Z2", "cohomology-h2", {"Q": z2, "B": z2}, expect={"order": 2})
write("h2-Z2-Z4", "cohomology-h2", {"Q": z2, "B": gm("Z4")}, expect={"order": 2})
write("h2-V4-Z2", "cohomology-h2", {"Q": gm("V4"), "B": z2})
write("h2-Z2-Z4neg-G2", "cohomology-h2",
      {"Q": gm("Z2", "Z2", [[0, 1], [0, 1]]), "B": gm("Z4", "Z2", [[0, 1, 2, 3], [0, 3, 2, 1]])})
write("h2-V4swap-Z2-G2", "cohomology-h2",
      {"Q": gm("V4", "Z2", [[0, 1, 2, 3], [0, 2, 1, 3]]), "B": gm("Z2", "Z2", [[0, 1], [0, 1]])})

write("obstruction-braid", "obstruction",
      {"h": {"M": z2, "N": z2}, "h_prime": {"M": z2, "N": z2, "values": {"braid": [0, 0, 0, 1]}},
       "phi": [0, 1], "f": [0, 1]}, expect={"vanishes": False})
write("obstruction-zero", "obstruction",
      {"h": {"M": z2, "N": z2}, "h_prime": {"M": z2, "N": z2}, "phi": [0, 1], "f": [0, 1]},
      expect={"vanishes": True})

write("schreier-Z2-0-0", "schreier", {"module": module("Z2->0"), "Q": z2, "psi": [0, 0]})
write("schreier-Z4neg-G2", "schreier",
      {"module": module("Z4(-)->0"), "Q": gm("Z2", "Z2", [[0, 1], [0, 1]]), "psi": [0, 0]})
write("schreier-Z2-Z4", "schreier", {"module": module("Z2->Z4"), "Q": z2, "psi": [0, 1]})
write("classify-Z2-0-0", "classify", {"module": module("Z2->0"), "Q": z2, "psi": [0, 0]},
      expect={"class_count": 2, "obstructed": False})
write("classify-iso", "classify", {"module": module("Z2=Z2"), "Q": z2, "psi": [0, 0]},
      expect={"class_count": 1})
# Z4 negated -> Z8 with x -> 3x, d(1) = 4: no extension of Coker = Z4 exists
twisted = {"B": {"name": "Z4"}, "D": {"name": "Z8"}, "d": [0, 4, 0, 4], "gamma": {"name": "Z2"},
           "actB": [[0, 1, 2, 3], [0, 3, 2, 1]], "actD": [[0, 1, 2, 3, 4, 5, 6, 7], [0, 3, 6, 1, 4, 7, 2, 5]]}
write("classify-obstructed", "classify",
      {"module": twisted, "Q": gm("Z4", "Z2", [[0, 1, 2, 3], [0, 3, 2, 1]]), "psi": [0, 1, 2, 3]},
      expect={"obstructed": True, "class_count": 0}, options={"guard": 1 << 20})

write("roundtrip-S3_A3_Z2", "roundtrip", {"module": module("S3/A3+Z2")})
write("roundtrip-Z2-Z4-to-Z4-Z2", "roundtrip", {"module": module("Z2->Z4"), "target": module("Z4->Z2")})
write("roundtrip-D4_V4", "roundtrip", {"module": module("D4/V4"), "target": module("Z2-0->Z2,eta=xy")})
