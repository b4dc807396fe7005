#!/usr/bin/env python3
"""Transcribe the extended-amplitude tables of a markdown source into golden JSON files.

usage: transcribe.py SOURCE.md OUTDIR

Writes one JSON file per table plus MANIFEST.sha256 in OUTDIR.
"""
import hashlib
import json
import re
import sys
from pathlib import Path

HEADER = re.compile(r"\|P_\{\[(\d+)\]\}\^\{\((\d+),\s*(\d+)\)\}\\rangle\s*=")
TERM = re.compile(r"\|\\tilde\{S\}_(\{[^}]*\}|\d)\\rangle")

# Known label defects in the source: (n, m, printed label) -> (label, note).
FIXES = {
    (2, 1, "2"): ("11", "printed as [2]; the q-free table is the antisymmetric colour"),
    (2, 1, "11"): ("2", "printed as [11]; the tau-free table is the symmetric colour"),
    (2, 1, "111111"): ("11111", "printed as [111111]; the table has degree 10, so |R| = 5"),
}

# Coefficients the source table skips; verification leaves them unchecked.
OMITTED = {
    (3, 1, "22"): (
        ["6,4,2", "6,4,1,1"],
        "the source table has no S~[6,4,2] term, and its S~[6,4,1,1] coefficient is not q <-> tau "
        "symmetric (tau^6*q^2 without q^6*tau^2), so neither entry is checked",
    ),
}

# Printed coefficients that break the q <-> tau mirror symmetry of self-conjugate
# colours: (table) -> {partition: (printed, mirrored, reason)}.
CORRECTIONS = {
    (3, 1, "22"): {
        "6,5,1": (
            "tau^5*q + tau^6*q + tau^4*q^2 + tau^5*q^2 + tau^3*q^3 + tau^4*q^3 + tau^2*q^4 + tau^3*q^4 + tau*q^5 + tau^2*q^5",
            "tau^5*q + tau^6*q + tau^4*q^2 + tau^5*q^2 + tau^3*q^3 + tau^4*q^3 + tau^2*q^4 + tau^3*q^4 + tau*q^5 + tau^2*q^5 + tau*q^6",
            "S~[6,5,1] is printed without tau*q^6, the mirror image of its tau^6*q term; [22] is self-conjugate so the coefficient must be symmetric in q <-> tau",
        ),
    },
}


def math_blocks(text):
    start = text.index("Appendix B")
    body = text[start:]
    blocks = body.split("$$")[1::2]
    return [b for b in blocks if "|P_" in b or "tilde{S}" in b and "frac" not in b]


def clean(s):
    s = re.sub(r"\\(begin|end)\{aligned\}", " ", s)
    return s.replace("&", " ").replace("\\\\", " ").replace("\n", " ")


def split_label(digits, total):
    """All weakly decreasing splits of a digit string into parts summing to total."""
    out = []

    def go(rest, parts):
        if not rest:
            if sum(parts) == total:
                out.append(parts)
            return
        for k in range(1, len(rest) + 1):
            head = rest[:k]
            if head.startswith("0"):
                break
            v = int(head)
            if parts and v > parts[-1]:
                break
            go(rest[k:], parts + [v])

    go(digits, [])
    return out


def parse_label(raw, total):
    raw = raw.strip("{}")
    if "," in raw:
        parts = [int(x) for x in raw.split(",")]
    else:
        cands = split_label(raw, total)
        if len(cands) != 1:
            raise ValueError(f"ambiguous label {raw!r} for degree {total}: {cands}")
        parts = cands[0]
    if sum(parts) != total:
        raise ValueError(f"label {raw!r} does not have size {total}")
    return parts


def coeff_expr(tex):
    s = tex.strip().lstrip("+").strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        return "1"
    s = s.replace("\\tau", "tau")
    s = re.sub(r"\^\{(\d+)\}", r"^\1", s)
    terms = []
    for term in s.split("+"):
        toks = re.findall(r"\d+|tau(?:\^\d+)?|q(?:\^\d+)?|t(?:\^\d+)?", term.replace(" ", " "))
        # a leading integer is a coefficient; exponents were captured with their base
        if not toks:
            raise ValueError(f"empty term in {tex!r}")
        terms.append("*".join(toks))
    return " + ".join(terms)


def tables(text):
    stream = " ".join(clean(b) for b in math_blocks(text))
    heads = list(HEADER.finditer(stream))
    for i, h in enumerate(heads):
        end = heads[i + 1].start() if i + 1 < len(heads) else len(stream)
        yield h.group(1), int(h.group(2)), int(h.group(3)), stream[h.end():end]


def parse_table(label, n, m, body):
    rep_label, note = FIXES.get((n, m, label), (label, None))
    rep = [int(c) for c in rep_label]
    d = n * sum(rep)
    coeffs = {}
    pos = 0
    for t in TERM.finditer(body):
        part = parse_label(t.group(1), d)
        key = ",".join(map(str, part))
        if key in coeffs:
            raise ValueError(f"duplicate S~{key} in [{label}] ({n},{m})")
        coeffs[key] = coeff_expr(body[pos:t.start()])
        pos = t.end()
    rec = {"knot": [n, m], "rep": rep, "basis": "mschur", "tau": True, "normalize": "leading-row", "coeffs": coeffs}
    notes = [note] if note else []
    for key, (printed, fixed, why) in CORRECTIONS.get((n, m, label), {}).items():
        if coeffs[key] != printed:
            raise ValueError(f"unexpected printed coefficient for S~{key}: {coeffs[key]}")
        coeffs[key] = fixed
        notes.append(why)
    if (n, m, label) in OMITTED:
        missing, why = OMITTED[(n, m, label)]
        rec["omitted"] = missing
        notes.append(why)
    if notes:
        rec["note"] = "; ".join(notes)
    return rec


def main():
    src, out = Path(sys.argv[1]), Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for label, n, m, body in tables(src.read_text(encoding="utf-8")):
        rec = parse_table(label, n, m, body)
        name = f"knot{n}-{m}_rep{''.join(map(str, rec['rep']))}.json"
        data = (json.dumps(rec, indent=1, ensure_ascii=False, separators=(",", ": ")) + "\n").encode()
        (out / name).write_bytes(data)
        manifest.append(f"{hashlib.sha256(data).hexdigest()}  {name}")
        print(f"{name}: {len(rec['coeffs'])} coefficients")
    (out / "MANIFEST.sha256").write_text("\n".join(sorted(manifest, key=lambda l: l.split()[1])) + "\n")


if __name__ == "__main__":
    main()
