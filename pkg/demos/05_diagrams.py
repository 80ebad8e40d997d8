"""Drawing contractions as arc diagrams, in text and as SVG files."""

# %%
import sys
import tempfile
from pathlib import Path

from boson_ordering import parse_word
from boson_ordering.contractions import Contraction, crossing_number, enumerate_contractions
from boson_ordering.diagram import render_ascii, render_svg

w = parse_word("(da)^4")

# %%
# The first contraction with a crossing.
crossing = next(c for c in enumerate_contractions(w) if crossing_number(c))
print(crossing)
print(render_ascii(w, crossing))

# %%
out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
for name, c in [("nested", Contraction.parse("2-5")), ("crossing", crossing)]:
    path = out_dir / f"{name}.svg"
    path.write_text(render_svg(w, c), encoding="utf-8")
    print("wrote", path)
