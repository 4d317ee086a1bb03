#!/usr/bin/env python3
"""Runs the CLI over a corpus and validates every stdout against the schema.

usage: check_schema.py CLI SCHEMA CORPUS

Corpus entries are {"args": [...], "exit": N}; an argument starting with
"@" names a file next to the corpus.
"""

import json
import os
import subprocess
import sys

import jsonschema


def main():
    cli, schema_path, corpus_path = sys.argv[1:4]
    with open(schema_path) as f:
        schema = json.load(f)
    with open(corpus_path) as f:
        corpus = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    base = os.path.dirname(os.path.abspath(corpus_path))

    failures = 0
    for case in corpus:
        args = [os.path.join(base, a[1:]) if a.startswith("@") else a for a in case["args"]]
        runs = [subprocess.run([cli, *args], capture_output=True, text=True) for _ in range(2)]
        proc = runs[0]
        label = " ".join(case["args"])
        problems = []
        if proc.returncode != case["exit"]:
            problems.append(f"exit {proc.returncode}, expected {case['exit']}")
        if runs[1].stdout != proc.stdout:
            problems.append("stdout differs between identical runs")
        lines = proc.stdout.splitlines()
        if len(lines) != 1:
            problems.append(f"expected one line of output, got {len(lines)}")
        else:
            try:
                doc = json.loads(lines[0])
                for err in validator.iter_errors(doc):
                    problems.append(f"schema: {err.message} at {list(err.absolute_path)}")
                if (proc.returncode == 0) != ("result" in doc):
                    problems.append("result key does not match exit status")
            except json.JSONDecodeError as e:
                problems.append(f"invalid JSON: {e}")
        status = "ok" if not problems else "FAIL"
        print(f"{status:4} [{proc.returncode}] {label}")
        for p in problems:
            print(f"     {p}")
            print(f"     stdout: {proc.stdout.strip()}")
        failures += bool(problems)

    print(f"{len(corpus) - failures}/{len(corpus)} cases passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
