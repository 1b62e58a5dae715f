# The command-line front end, driven from Python.  From a shell the same
# calls read `flames extract fixtures/fx2.graph` and so on.

import io
import json
import tempfile
from pathlib import Path

from flames.cli import run

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
graph = str(FIXTURES / "fx2.graph")

out = io.StringIO()
print("lambda exit", run(["lambda", graph], stdout=out))
print(json.loads(out.getvalue())["result"])

out = io.StringIO()
print("extract exit", run(["extract", graph, "--shuffle-seed", "3"], stdout=out))
with tempfile.TemporaryDirectory() as tmp:
    result = Path(tmp) / "flame.json"
    result.write_text(out.getvalue())
    out = io.StringIO()
    print("verify exit", run(["verify", graph, "--against", str(result)], stdout=out))

# Verifying the graph against itself fails: v has one in-edge too many.
out = io.StringIO()
print("self-verify exit", run(["verify", graph, "--against", graph], stdout=out))
print(json.loads(out.getvalue())["result"]["vertices"]["v"])
