"""Convert UCR 2018 ``.tsv`` files from the ``ucr_datasets`` wheel into ``.ts`` files.

Usage::

    pip download ucr_datasets==0.0.6 --no-deps -d /tmp/ucr
    python scripts/vendor_ucr.py /tmp/ucr/ucr_datasets-0.0.6-py3-none-any.whl Chinatown data/
"""
import sys
import zipfile
from pathlib import Path


def convert(lines, name):
    rows = [ln.split("\t") for ln in lines if ln.strip()]
    labels = []
    for r in rows:
        if r[0] not in labels:
            labels.append(r[0])
    lengths = {len(r) - 1 for r in rows}
    missing = any(v.strip().lower() == "nan" for r in rows for v in r[1:])
    out = [
        f"@problemName {name}",
        "@timeStamps false",
        f"@missing {'true' if missing else 'false'}",
        "@univariate true",
        f"@equalLength {'true' if len(lengths) == 1 else 'false'}",
    ]
    if len(lengths) == 1:
        out.append(f"@seriesLength {lengths.pop()}")
    out.append("@classLabel true " + " ".join(sorted(labels, key=float)))
    out.append("@data")
    for r in rows:
        vals = ["?" if v.strip().lower() == "nan" else v.strip() for v in r[1:]]
        out.append(",".join(vals) + ":" + r[0])
    return "\n".join(out) + "\n"


def main(wheel, name, dest):
    z = zipfile.ZipFile(wheel)
    target = Path(dest) / name
    target.mkdir(parents=True, exist_ok=True)
    for part in ("TRAIN", "TEST"):
        text = z.read(f"ucr_datasets/data/{name}_{part}.tsv").decode()
        (target / f"{name}_{part}.ts").write_text(convert(text.splitlines(), name))


if __name__ == "__main__":
    main(*sys.argv[1:4])
