"""Parse a scene description, verify it, and emit deterministic SVG.

Writes the rendered figures into demos/output/.
"""

from pathlib import Path

from loci2d import compute_scene, parse_scene, render_svg
from loci2d.cli import main as cli_main

SCENE = """\
# two anchors, three loci, one triangle
point A 0 0
point B 5 0
point C 1 4
locus apollonius A B 3/2
locus sumsq A B 30
locus diffsq A B 10
triangle A B C
"""

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

scene = parse_scene(SCENE)
outcomes = compute_scene(scene)
print(f"scene: {len(scene.points)} points, {len(scene.directives)} directives")
for outcome in outcomes:
    print(f"  {outcome.directive} -> {type(getattr(outcome, 'locus', outcome)).__name__}")

svg = render_svg(scene, outcomes)
target = out_dir / "showcase.svg"
target.write_bytes(svg)
print(f"wrote {target} ({len(svg)} bytes)")

again = render_svg(scene, compute_scene(scene))
print(f"byte-identical on re-render: {svg == again}")

scene_file = out_dir / "showcase.scene"
scene_file.write_text(SCENE, encoding="utf-8")
print()
print("verification report via the CLI:")
exit_code = cli_main(["verify", "--scene", str(scene_file)])
print(f"exit code {exit_code}")
