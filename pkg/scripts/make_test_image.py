"""Regenerate the bundled 512x512 test scene."""
import argparse
from pathlib import Path

from qdog.imageio import save
from qdog.testimage import BUNDLED, synthetic_scene

DEFAULT = Path(__file__).resolve().parents[1] / "src" / "qdog" / "data" / BUNDLED

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(DEFAULT))
    ap.add_argument("--size", type=int, default=512)
    args = ap.parse_args()
    save(args.out, synthetic_scene(args.size))
    print(f"wrote {args.out}")
