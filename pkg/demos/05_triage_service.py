"""Serve the human triage loop: candidate crops in, coarse labels out.

Run 01, 03 and 04 first (and `npm run build` in frontend/ for the browser
UI). The service lists candidate windows in descending-score order, serves
their PNG crops, appends accept/reject decisions to a crash-safe JSON-lines
log, and exports the decided windows as a coarse 100x100 training set.

Open http://127.0.0.1:8000/ and use `a` / `r` to label. Ctrl-C to stop; the
log survives restarts and the session replays it on startup.
"""

import json
from pathlib import Path

from palmscan.raster import PatchWindow, load_orthomosaic
from palmscan.review import serve
from palmscan.scan import CandidateWindow

HERE = Path(__file__).parent
SCAN = HERE / "out" / "scan"

ortho = load_orthomosaic(SCAN / "crop.png")
records = json.loads((SCAN / "candidates.json").read_text())
candidates = [CandidateWindow(PatchWindow(r["x0"], r["y0"], r["size"]),
                              r["score"]) for r in records]
print(f"{len(candidates)} candidates queued for review")

static = HERE.parent / "frontend" / "dist"
serve(ortho, candidates,
      port=8000,
      log_path=SCAN / "labels.jsonl",
      static_dir=static if static.is_dir() else None,
      export_dir=SCAN / "coarse")
