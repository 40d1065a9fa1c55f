"""Write src/germlab/data/corpus.jsonl with expected mu, tau and m.

mu and tau come from the brute-force oracle (truncated linear algebra), m
from the order of the parsed polynomial.  Run from the repository root:

    python tools/fill_expected.py
"""

import json
import sys
from pathlib import Path

from germlab.oracle import INFINITE_SUSPECTED, oracle_dim
from germlab.parsing import parse_corpus

ROOT = Path(__file__).resolve().parent.parent
SOURCE = ROOT / "tools" / "corpus_source.jsonl"
TARGET = ROOT / "src" / "germlab" / "data" / "corpus.jsonl"


def main():
    text = SOURCE.read_text()
    header = [line for line in text.splitlines() if line.startswith("#")]
    out = list(header)
    for spec in parse_corpus(text):
        f = spec.parse()
        jac = f.gradient()
        mu = oracle_dim(jac)
        tau = oracle_dim(jac + [f])
        entry = spec.to_dict()
        expected = {"m": f.order()}
        if mu != INFINITE_SUSPECTED:
            expected["mu"] = mu
        if tau != INFINITE_SUSPECTED:
            expected["tau"] = tau
        entry["expected"] = expected
        print(spec.name, expected, file=sys.stderr)
        out.append(json.dumps(entry))
    TARGET.write_text("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
