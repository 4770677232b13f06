#!/usr/bin/env python3
"""
Batch sweep: construct, refine and verify every admissible instance of
Theorems 1-5 plus the dart-to-kite pushforward, one JSON result per instance
"""
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from tqdm import tqdm

from config import config
from constructions import build_partition, lemma1_refine, map_dissection
from errors import EquidissectError
from spectrum import odd_divisors
from verify import verify_equidissection


def dart_pairs(r_max):
    """Coprime (r, s) with r odd, 3 <= r <= r_max and r > 2s"""
    for r in range(3, r_max + 1, 2):
        for s in range(1, (r + 1) // 2):
            if math.gcd(r, s) == 1:
                yield r, s


def sweep_instances(r_max=49, t_span=40, k_max=8, thm5_k_max=2, mapped=20):
    """Instance descriptions in a fixed order"""
    instances = []
    for r, s in dart_pairs(r_max):
        for t in range(r, r + t_span + 1, 2):
            instances.append({"theorem": 1, "params": {"r": r, "s": s, "t": t}, "expected": t})
    dart_chords = []
    for r, s in dart_pairs(r_max):
        if s % 2 == 0:
            dart_chords.append({"theorem": 2, "params": {"r": r, "s": s}, "expected": r - s})
        else:
            for t in odd_divisors(r - s):
                if t > r - 2 * s:
                    dart_chords.append(
                        {"theorem": 3, "params": {"r": r, "s": s, "t": t}, "expected": 2 * (r - s) - t}
                    )
    instances += dart_chords
    for k in range(1, k_max + 1):
        instances.append({"theorem": 4, "params": {"k": k}, "expected": 8 * k * k + 6 * k + 1})
    for k in range(1, thm5_k_max + 1):
        u = 8 * k * k + 6 * k + 1
        instances.append({"theorem": 5, "params": {"k": k}, "expected": u * (2 * k + 1)})
    for item in dart_chords[:mapped]:
        instances.append(dict(item, to_kite=True))

    for item in instances:
        tag = "_".join(f"{key}{value}" for key, value in item["params"].items())
        suffix = "_kite" if item.get("to_kite") else ""
        item["name"] = f"thm{item['theorem']}_{tag}{suffix}"
    return instances


def run_instance(item):
    """Build, refine and verify one instance; never raises"""
    result = {"name": item["name"], "theorem": item["theorem"], "params": item["params"]}
    try:
        built = build_partition(item["theorem"], **item["params"])
        dissection = built if item["theorem"] == 5 else lemma1_refine(built)
        if item.get("to_kite"):
            p = item["params"]
            dissection = map_dissection(dissection, Fraction(p["r"], 2 * p["s"]))
        report = verify_equidissection(dissection.polygon, dissection.faces)
    except EquidissectError as e:
        result.update(ok=False, error=e.to_json())
        return result

    result.update(
        ok=report.is_equidissection and report.face_count == item["expected"],
        expected_faces=item["expected"],
        report=report.to_json(),
    )
    return result


def verify_instances(instances, workers=None):
    workers = workers or config.SWEEP_WORKERS
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(
                tqdm(pool.map(run_instance, instances, chunksize=4), total=len(instances), desc="Verifying")
            )
    return [run_instance(item) for item in tqdm(instances, desc="Verifying")]


def write_results(results, out_dir):
    """One JSON file per instance plus summary.json; returns the summary"""
    os.makedirs(out_dir, exist_ok=True)
    for result in results:
        with open(os.path.join(out_dir, f"{result['name']}.json"), "w", encoding="utf-8") as f:
            json.dump(result, f, indent=2)

    failed = [r["name"] for r in results if not r["ok"]]
    summary = {"instances": len(results), "passed": len(results) - len(failed), "failed": failed}
    with open(os.path.join(out_dir, "summary.json"), "w", encoding="utf-8") as f:
        json.dump(summary, f, indent=2)
    return summary


def run_sweep(out_dir=None, workers=None, **ranges):
    results = verify_instances(sweep_instances(**ranges), workers)
    return write_results(results, out_dir or config.OUTPUT_DIR)


def main():
    """Main execution pipeline"""

    print("=" * 80)
    print("Equidissection Sweep")
    print("=" * 80)

    print("\n" + "=" * 80)
    print("STEP 1: Enumerating Instances")
    print("=" * 80)

    instances = sweep_instances()
    counts = {}
    for item in instances:
        counts[item["theorem"]] = counts.get(item["theorem"], 0) + 1
    for theorem, count in sorted(counts.items()):
        print(f"✓ Theorem {theorem}: {count} instances")

    print("\n" + "=" * 80)
    print("STEP 2: Constructing and Verifying")
    print("=" * 80)

    results = verify_instances(instances)

    print("\n" + "=" * 80)
    print("STEP 3: Writing Results")
    print("=" * 80)

    summary = write_results(results, config.OUTPUT_DIR)
    print(f"\n✓ Wrote {summary['instances']} results to {config.OUTPUT_DIR}")

    print("\n" + "=" * 80)
    if summary["failed"]:
        print(f"❌ {len(summary['failed'])} of {summary['instances']} instances failed:")
        for name in summary["failed"]:
            print(f"  ✗ {name}")
    else:
        print(f"✅ All {summary['instances']} instances verified")
    print("=" * 80)
    return 0 if not summary["failed"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
