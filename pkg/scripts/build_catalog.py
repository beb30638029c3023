"""Regenerate the shipped Cayley tables for the group catalog."""

from pathlib import Path

from rees_commute.formats import format_cayley
from rees_commute.groups import CATALOG_SPECS, catalog_filename, named_group

OUT = Path(__file__).resolve().parent.parent / "src" / "rees_commute" / "data" / "catalog"

if __name__ == "__main__":
    OUT.mkdir(parents=True, exist_ok=True)
    for spec in CATALOG_SPECS:
        (OUT / catalog_filename(spec)).write_text(format_cayley(named_group(spec)))
        print(spec)
