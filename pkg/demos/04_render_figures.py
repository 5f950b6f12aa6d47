# Drawing windmills and Young diagrams.
#
# Run from the repository root:  python3 demos/04_render_figures.py [outdir]
import sys
from pathlib import Path

from twosquares import render as R
from twosquares.partition import Quad
from twosquares.windmill import Triple, zag

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
out.mkdir(exist_ok=True)

# the self-dual windmill of 17: zag fixes it
print(R.render_windmill(Triple(1, 1, 4)))

# a windmill and its zag partner share one outer boundary
t = Triple(3, 2, 1)
print(R.render_windmill(t))
print(R.render_windmill(zag(t)))
print("same outline:", R.outer_shape(t) == R.outer_shape(zag(t)))

# a Young diagram beside its conjugate
print(R.render_young(Quad(4, 2, 3, 3), with_conjugate=True))

# every zag pair of S_17, side by side, as SVG
(out / "pairs_17.svg").write_text(R.render_pairs(17, "svg"))
(out / "young_4_2_3_3.svg").write_text(R.render_young(Quad(4, 2, 3, 3), True, "svg"))
print("wrote", sorted(f.name for f in out.iterdir()))
