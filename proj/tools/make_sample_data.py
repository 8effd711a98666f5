#!/usr/bin/env python3
"""Author the bundled sample instance under data/sample/.

Deterministic: a fixed seed drives every draw, so rerunning the script
reproduces the committed files byte for byte. The instance is a 15-city,
42-day calendar starting on a Monday, with two venues in New York and
Boston to exercise venue merging, an availability density above 0.5, and
a mildly asymmetric mile matrix whose floor(mile/500) buckets agree in
both directions.
"""

import math
import random
from pathlib import Path

SEED = 20131014
OUT = Path(__file__).resolve().parent.parent / "data" / "sample"

# name, venue(s), latitude, longitude
CITIES = [
    ("Miami", ["James L Knight Center"], 25.76, -80.19),
    ("Tampa", ["USF Sun Dome"], 27.95, -82.46),
    ("Atlanta", ["Fox Theatre"], 33.75, -84.39),
    ("New Orleans", ["Saenger Theatre"], 29.95, -90.07),
    ("Houston", ["Bayou Music Center"], 29.76, -95.37),
    ("Grand Prairie", ["Verizon Theatre"], 32.75, -97.00),
    ("Los Angeles", ["Shrine Auditorium"], 34.05, -118.24),
    ("SF - Warfield", ["The Warfield"], 37.78, -122.41),
    ("Seattle", ["Paramount Theatre"], 47.61, -122.33),
    ("Chicago", ["Chicago Theatre"], 41.88, -87.63),
    ("Detroit", ["Fox Theatre Detroit"], 42.33, -83.05),
    ("Washington DC", ["DAR Constitution Hall"], 38.91, -77.04),
    ("Philly", ["Tower Theater"], 39.95, -75.17),
    ("New York", ["Beacon Theatre", "Radio City Music Hall"], 40.71, -74.01),
    ("Boston", ["Orpheum Theatre", "Wang Theatre"], 42.36, -71.06),
]

NUM_DAYS = 42
ROAD_FACTOR = 1.17  # road miles run longer than the great circle
TRAVEL_LIMIT = 500

# Status token distribution per venue-day. Open, open-hold and waitlist
# slots 1..3 merge to available; 4h+ to relatively unavailable; confirmed,
# pending and blank to absolutely unavailable.
TOKENS = [
    ("o", 0.50),
    ("o/h", 0.06),
    ("1h", 0.02),
    ("2h", 0.02),
    ("3h", 0.02),
    ("4h", 0.05),
    ("5h", 0.04),
    ("6h", 0.03),
    ("7h", 0.02),
    ("c", 0.12),
    ("p", 0.06),
    ("", 0.06),
]

AVAILABLE = {"o", "o/h", "1h", "2h", "3h"}
RELATIVE = {"4h", "5h", "6h", "7h", "8h", "9h"}


def haversine_miles(a, b):
    lat1, lon1 = math.radians(a[0]), math.radians(a[1])
    lat2, lon2 = math.radians(b[0]), math.radians(b[1])
    h = (math.sin((lat2 - lat1) / 2) ** 2
         + math.cos(lat1) * math.cos(lat2) * math.sin((lon2 - lon1) / 2) ** 2)
    return 3958.8 * 2 * math.asin(math.sqrt(h))


def draw_token(rng):
    x = rng.random()
    acc = 0.0
    for token, p in TOKENS:
        acc += p
        if x < acc:
            return token
    return "o"


def merged_code(tokens):
    codes = []
    for t in tokens:
        if t in AVAILABLE:
            codes.append(1)
        elif t in RELATIVE:
            codes.append(0)
        else:
            codes.append(-1)
    if 1 in codes:
        return 1
    if all(c == -1 for c in codes):
        return -1
    return 0


def main():
    rng = random.Random(SEED)
    m = len(CITIES)

    # Miles: great circle times a road factor, the reverse direction jittered
    # a few percent but held inside the same 500-mile bucket.
    mile = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            base = int(round(haversine_miles(CITIES[i][2:], CITIES[j][2:]) * ROAD_FACTOR))
            base = max(base, 60)
            bucket = base // TRAVEL_LIMIT
            lo, hi = bucket * TRAVEL_LIMIT, (bucket + 1) * TRAVEL_LIMIT - 1
            jitter = int(round(base * rng.uniform(-0.03, 0.03)))
            back = min(max(base + jitter, lo), hi)
            mile[i][j], mile[j][i] = base, back

    # Availability: one token column per venue.
    venues = []  # (venue name, city name)
    for name, venue_names, _, _ in CITIES:
        for v in venue_names:
            venues.append((v, name))
    grid = [[draw_token(rng) for _ in venues] for _ in range(NUM_DAYS)]

    # Per-city merged availability, for the density check.
    merged = []
    for d in range(NUM_DAYS):
        row = []
        col = 0
        for name, venue_names, _, _ in CITIES:
            k = len(venue_names)
            row.append(merged_code(grid[d][col:col + k]))
            col += k
        merged.append(row)

    available = sum(row.count(1) for row in merged)
    density = available / (NUM_DAYS * m)
    assert density >= 0.5, f"availability density {density:.3f} below 0.5"
    for c in range(m):
        assert any(merged[d][c] == 1 for d in range(NUM_DAYS)), CITIES[c][0]

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "availability.csv", "w") as f:
        f.write(",".join(v for v, _ in venues) + "\n")
        f.write(",".join(c for _, c in venues) + "\n")
        for row in grid:
            f.write(",".join(row) + "\n")

    with open(OUT / "miles.csv", "w") as f:
        f.write(",".join(name for name, _, _, _ in CITIES) + "\n")
        for i in range(m):
            f.write(",".join(str(x) for x in mile[i]) + "\n")

    with open(OUT / "instance.manifest", "w") as f:
        f.write(
            "# Bundled sample: 15 cities over a 42-day calendar starting on a Monday.\n"
            "# New York and Boston list two venues each; the parser merges them.\n"
            "\n"
            "[instance]\n"
            "availability = availability.csv\n"
            "miles = miles.csv\n"
            "days = 42\n"
            "start_weekday = Mon\n"
            "travel_limit = 500\n"
            "waitlist_cutoff = 3\n"
            "symmetric_days = false\n"
            "\n"
            "# cost = mile * total_miles + good * good_days + bad * bad_days\n"
            "[weights]\n"
            "mile = 20\n"
            "good = -200\n"
            "bad = 200\n"
            "\n"
            "[penalties]\n"
            "avail1 = 10000\n"
            "avail2 = 1000000\n"
            "break = 10000\n"
            "sep1 = 10000\n"
            "sep2 = 2000000\n"
            "\n"
            "[annealing]\n"
            "initial_temp = 5000\n"
            "temp_limit = 500\n"
            "iters_per_temp = 5000\n"
            "alpha = 0.95\n"
            "budget_seconds = 30\n"
            "max_moves = 0\n"
            "seed = 0\n"
            "restart_reset = true\n"
            "\n"
            "[solver]\n"
            "break_limit = 4\n"
            "output_dir = out\n"
        )

    print(f"wrote {OUT}, density {density:.3f}, miles {mile[0][1]}..{max(map(max, mile))}")


if __name__ == "__main__":
    main()
