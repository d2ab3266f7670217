"""Render a few figures with the CLI and parse them as XML."""
import json
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

NS = "{http://www.w3.org/2000/svg}"

cases = [
    ("two", "0,0,1,0,0.5,0.75,0,1", "0.3333333333333333,0.75", 2),
    ("none", "0,0,1,0,4,2,0,1", "0.6666666666666666,0.3333333333333333", 0),
    ("boundary", "0,0,1,0,4,2,0,1", "0.5,0", 1),
    ("trapezoid", "-1,2,3,4,9,2,3,-1", "4,2", 1),
]

exe, outdir = sys.argv[1], Path(sys.argv[2])
failed = False
for name, quad, point, expected in cases:
    path = outdir / f"check_{name}.svg"
    proc = subprocess.run([exe, "svg", "--quad", quad, "--point", point, "--svg", str(path)],
                          capture_output=True, text=True)
    if proc.returncode != 0:
        print(f"{name}: exit {proc.returncode}: {proc.stdout}{proc.stderr}")
        failed = True
        continue
    json.loads(proc.stdout)
    root = ET.parse(path).getroot()
    ellipses = root.findall(f".//{NS}ellipse")
    polygons = root.findall(f".//{NS}polygon")
    ok = root.tag == f"{NS}svg" and len(ellipses) == expected and len(polygons) == 1
    print(f"{name}: {'ok' if ok else 'FAILED'} ({len(ellipses)} ellipses)")
    failed |= not ok
sys.exit(1 if failed else 0)
