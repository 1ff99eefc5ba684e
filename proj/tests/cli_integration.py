# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The siegelwb Authors

"""End-to-end checks of the siegelwb CLI: exit codes, documented examples and
schema validity of every JSON document it prints."""

import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing
from referencing.jsonschema import DRAFT7

CLI, SCHEMAS, DATA = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])

failures = []


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


registry = referencing.Registry()
for name in ("expansion.schema.json", "report.schema.json", "degeneration.schema.json"):
    resource = referencing.Resource.from_contents(load_schema(name), default_specification=DRAFT7)
    registry = registry.with_resources([(resource.id(), resource), (name, resource)])


def validator(name):
    return jsonschema.Draft7Validator(registry[name].contents, registry=registry)


REPORT = validator("report.schema.json")
EXPANSION = validator("expansion.schema.json")
DEGENERATION = validator("degeneration.schema.json")


def run(*args, stdin=None, env=None, expect=0):
    proc = subprocess.run([CLI, *args], input=stdin, capture_output=True, text=True, env=env, timeout=600)
    label = " ".join(args)
    if proc.returncode != expect:
        failures.append(f"{label}: exit {proc.returncode}, expected {expect}\n{proc.stdout}\n{proc.stderr}")
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{label}: stdout is not JSON ({e})")
        return None, proc
    errors = sorted(REPORT.iter_errors(doc), key=str)
    if errors:
        failures.append(f"{label}: schema violation: {errors[0].message}")
    return doc, proc


def check(condition, message):
    if not condition:
        failures.append(message)


def main():
    env = dict(os.environ)
    env.pop("SIEGELWB_CACHE", None)

    doc, _ = run("schottky-verify", "--genus", "2", "--max-trace", "8", env=env)
    check(doc and doc["status"] == "pass" and doc["counterexample"] is None, "schottky-verify g2 passes")
    check(doc and doc["indices_checked"] == 47, "schottky-verify g2 checks 47 indices")

    doc, _ = run("theta-coeffs", "--lattice", "E8", "--genus", "1", "--max-trace", "4", env=env)
    if doc:
        check([e["a"] for e in doc["expansion"]["entries"]] == ["1", "240", "2160"], "theta-coeffs E8 1/240/2160")
        check(not list(EXPANSION.iter_errors(doc["expansion"])), "expansion schema")

    doc, _ = run("eval", "--lattice", "E8", "--genus", "1", "--tau", "i", "--direct-budget", "20", env=env)
    check(doc and doc["status"] == "pass" and doc["direct"]["rel_discrepancy"] <= 1e-9, "eval E8 at i agrees")
    check(doc and abs(doc["value"][1]) < 1e-12 and doc["value"][0] > 1.0, "eval E8 at i is real")

    doc, _ = run("eval", "--form", "schottky", "--genus", "2", "--tau", "[[\"1.2i\", 0.1], [0.1, \"1.1i\"]]",
                 env=env)
    check(doc and doc["value"] == [0.0, 0.0], "eval schottky g2 vanishes")

    doc, _ = run("lattice-enum", "--lattice", "D16plus", "--max-norm", "4", env=env)
    check(doc and [c["count"] for c in doc["counts"]] == [1, 480, 61920], "lattice-enum D16plus")
    doc, _ = run("lattice-enum", "--lattice", "E8", "--max-norm", "2", "--vectors", env=env)
    check(doc and len(doc["vectors"]) == 241, "lattice-enum E8 vectors")

    doc2, _ = run("theta-coeffs", "--lattice", "E8", "--genus", "2", "--max-trace", "4", env=env)
    if doc2:
        doc, _ = run("siegel-phi", "--input", "-", stdin=json.dumps(doc2), env=env)
        check(doc and [e["a"] for e in doc["expansion"]["entries"]] == ["1", "240", "2160"], "siegel-phi E8 g2")

    for name in ("degeneration.json", "degeneration_genus2.json"):
        data = json.loads((DATA / name).read_text())
        check(not list(DEGENERATION.iter_errors(data)), f"{name} matches the degeneration schema")
    doc, _ = run("fay-check", "--input", str(DATA / "degeneration.json"), "--options", str(DATA / "options.json"),
                 env=env)
    check(doc and doc["status"] == "pass" and len(doc["checks"]) == 3, "fay-check genus 1 passes")
    doc, _ = run("fay-check", "--input", str(DATA / "degeneration_genus2.json"), "--form", "D16plus",
                 "--max-trace", "6", "--derivative", "x12", env=env)
    check(doc and doc["status"] == "pass", "fay-check genus 2 passes")

    # Errors: malformed input, bad tau, unknown lattice, usage.
    doc, _ = run("fay-check", "--input", str(DATA / "malformed.json"), env=env, expect=2)
    check(doc and doc.get("error") == "parse-error", "malformed input gives parse-error")
    doc, _ = run("eval", "--lattice", "E8", "--tau", "-i", env=env, expect=2)
    check(doc and doc.get("error") == "domain-error", "tau outside the Siegel space")
    doc, _ = run("theta-coeffs", "--lattice", "Leech", "--genus", "1", "--max-trace", "4", env=env, expect=2)
    check(doc and doc.get("error") == "unsupported-lattice", "unsupported lattice")
    doc, _ = run("theta-coeffs", "--bogus", env=env, expect=2)
    check(doc and doc.get("error") == "usage", "unknown flag")
    doc, _ = run("fay-check", "--input", str(DATA / "missing.json"), env=env, expect=2)
    check(doc and doc.get("error") == "io-error", "missing input file")

    # Cache: persistence, statistics and byte-identical reruns.
    with tempfile.TemporaryDirectory() as tmp:
        cache = str(pathlib.Path(tmp) / "counts.jsonl")
        first, proc = run("--cache", cache, "--stats", "schottky-verify", "--genus", "3", "--max-trace", "4", env=env)
        stats = json.loads(proc.stderr.strip().splitlines()[-1])
        check(stats["hits"] + stats["misses"] == stats["calls"] and stats["misses"] > 0, "cold run statistics")
        doc, _ = run("--cache", cache, "cache-stats", env=env)
        check(doc and doc["records"] > 0 and doc["records"] == sum(doc["per_lattice"].values()), "cache records")
        second, proc = run("--cache", cache, "--stats", "--verify-cache", "schottky-verify", "--genus", "3",
                           "--max-trace", "4", env=env)
        stats = json.loads(proc.stderr.strip().splitlines()[-1])
        check(stats["hits"] == stats["calls"] and stats["misses"] == 0, "warm run served from the cache")
        check(first == second, "reports identical with a cold and a warm cache")
        env_cache = dict(env, SIEGELWB_CACHE=cache)
        doc, _ = run("cache-stats", env=env_cache)
        check(doc and doc["path"] == cache, "cache path from the environment")

        a = subprocess.run([CLI, "theta-coeffs", "--lattice", "D16plus", "--genus", "2", "--max-trace", "6"],
                           capture_output=True, env=env).stdout
        b = subprocess.run([CLI, "--no-dedup", "theta-coeffs", "--lattice", "D16plus", "--genus", "2",
                            "--max-trace", "6"], capture_output=True, env=env).stdout
        check(a == b and len(a) > 0, "byte-identical output with and without deduplication")

        pathlib.Path(cache).write_text("not json\n")
        doc, proc = run("--cache", cache, "cache-stats", env=env)
        check(doc and doc["rebuilt"] and doc["records"] == 0, "corrupt cache is rebuilt")
        check("rebuilt" in proc.stderr or "corrupt" in proc.stderr, "corrupt cache warning")

    for f in failures:
        print("FAIL:", f)
    print(f"cli integration: {len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
