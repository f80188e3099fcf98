#!/usr/bin/env python3
"""Fetch the PJM 2021 hourly fixtures used by the data-gated acceptance tests.

Downloads hourly generation by fuel type (solar, wind, nuclear) and hourly
metered load for calendar year 2021 from PJM Data Miner 2 and writes them as
one-column CSVs:

    data/pjm/solar_2021.csv
    data/pjm/wind_2021.csv
    data/pjm/nuclear_2021.csv
    data/pjm/load_2021.csv

Each file has a ``value`` header followed by one MW value per hour in
chronological order. Load is the RTO-wide sum over metered load areas.

Data Miner 2 requires a (free) subscription key; register at
https://dataminer2.pjm.com, then either pass --api-key or set PJM_API_KEY.
Endpoints: ``gen_by_fuel`` and ``hrl_load_metered``.

This script needs outbound network access; run it on a machine that has it
and copy the four CSVs into data/pjm/ (or point SYNTHSERIES_PJM_DIR at them).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import urllib.parse
import urllib.request
from collections import defaultdict
from pathlib import Path

API_ROOT = "https://api.pjm.com/api/v1"
PAGE_ROWS = 50000
START = "2021-01-01 00:00"
END = "2021-12-31 23:59"


def _get(endpoint: str, params: dict[str, str], api_key: str) -> list[dict]:
    """All rows of one Data Miner 2 feed, following rowCount paging."""
    rows: list[dict] = []
    start_row = 1
    while True:
        q = dict(params, rowCount=str(PAGE_ROWS), startRow=str(start_row), format="json")
        url = f"{API_ROOT}/{endpoint}?{urllib.parse.urlencode(q)}"
        req = urllib.request.Request(url, headers={"Ocp-Apim-Subscription-Key": api_key})
        with urllib.request.urlopen(req, timeout=120) as resp:
            payload = json.load(resp)
        items = payload.get("items", payload if isinstance(payload, list) else [])
        rows.extend(items)
        if len(items) < PAGE_ROWS:
            return rows
        start_row += PAGE_ROWS


def _write(values_by_hour: dict[str, float], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["timestamp", "value"])
        for ts in sorted(values_by_hour):
            writer.writerow([ts, repr(values_by_hour[ts])])
    print(f"wrote {len(values_by_hour)} hours to {path}")


def fetch_generation(api_key: str, out_dir: Path) -> None:
    rows = _get(
        "gen_by_fuel",
        {"datetime_beginning_ept": f"{START}to{END}", "fields": "datetime_beginning_ept,fuel_type,mw"},
        api_key,
    )
    wanted = {"Solar": "solar", "Wind": "wind", "Nuclear": "nuclear"}
    series: dict[str, dict[str, float]] = {name: defaultdict(float) for name in wanted.values()}
    for row in rows:
        fuel = row.get("fuel_type")
        if fuel in wanted:
            series[wanted[fuel]][row["datetime_beginning_ept"]] += float(row["mw"])
    for name, by_hour in series.items():
        _write(dict(by_hour), out_dir / f"{name}_2021.csv")


def fetch_load(api_key: str, out_dir: Path) -> None:
    rows = _get(
        "hrl_load_metered",
        {"datetime_beginning_ept": f"{START}to{END}", "fields": "datetime_beginning_ept,mw"},
        api_key,
    )
    by_hour: dict[str, float] = defaultdict(float)
    for row in rows:
        by_hour[row["datetime_beginning_ept"]] += float(row["mw"])
    _write(dict(by_hour), out_dir / "load_2021.csv")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--api-key", default=os.environ.get("PJM_API_KEY"), help="Data Miner 2 subscription key")
    parser.add_argument("--out-dir", default=str(Path(__file__).resolve().parent.parent / "data" / "pjm"))
    args = parser.parse_args(argv)
    if not args.api_key:
        print("error: pass --api-key or set PJM_API_KEY (register at dataminer2.pjm.com)", file=sys.stderr)
        return 2
    out_dir = Path(args.out_dir)
    fetch_generation(args.api_key, out_dir)
    fetch_load(args.api_key, out_dir)
    print("done; rerun pytest to exercise the data-gated acceptance tests")
    return 0


if __name__ == "__main__":
    sys.exit(main())
