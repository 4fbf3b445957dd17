"""Render every figure from a small sweep and check each SVG parses as XML."""
import pathlib
import shutil
import subprocess
import sys
import xml.etree.ElementTree as ET

binary, work = sys.argv[1], pathlib.Path(sys.argv[2])
shutil.rmtree(work, ignore_errors=True)
work.mkdir(parents=True)

subprocess.run([binary, "sweep", "--desk-scale", "--out", str(work)], check=True, stdout=subprocess.DEVNULL)
subprocess.run([binary, "plot", "--in", str(work / "records.csv"), "--out", str(work / "fig")], check=True,
               stdout=subprocess.DEVNULL)

svgs = sorted((work / "fig").glob("*.svg"))
if len(svgs) != 12:
    sys.exit(f"expected 12 SVG files, found {len(svgs)}")
for path in svgs:
    root = ET.parse(path).getroot()
    if root.tag != "{http://www.w3.org/2000/svg}svg":
        sys.exit(f"{path.name}: root element is {root.tag}")
    print(f"ok {path.name}")
