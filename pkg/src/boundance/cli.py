"""Command-line front end.

Exit codes: 0 = affirmative or success, 1 = negative decision, 2 = input
error, 3 = theorem falsification (method disagreement; comes with a
serialized reproducer on stderr).  Human output goes to stdout,
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import corpus, decide, generate, graphs, invariants
from .complexes import Chain, Complex, ComplexError, load_complex
from .decide import UNBOUNDED, TheoremViolation
from .graphs import NoPath


def _load_cycles(K: Complex, path: str) -> list[Chain]:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return K.cycles_from_json(obj)


def _load_chain(K: Complex, path: str) -> Chain:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    return K.chain_from_json(obj)


def _chain_str(K: Complex, chain: Chain) -> str:
    ids = K.ids_of(chain)
    return "+".join(ids) if ids else "0"


def _emit(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=1) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _degree_histogram(K: Complex) -> str:
    counts = Counter(K.degrees())
    return " ".join(f"{d}:{counts[d]}" for d in sorted(counts))


def cmd_validate(args) -> int:
    K = load_complex(args.file)
    sizes = " ".join(f"S{d}={K.size(d)}" for d in range(K.n + 1))
    print(sizes)
    if K.n >= 1:
        print(f"degrees: {_degree_histogram(K)}")
    return 0


def cmd_boundant(args) -> int:
    K = load_complex(args.file)
    cycles = _load_cycles(K, args.cycles)
    method = args.method
    verdicts: dict[str, bool] = {}
    witness = None
    if method in ("primal", "all"):
        witness = decide.disjoint_chains(K, cycles, args.k)
        verdicts["primal"] = witness is not None
    if method in ("dual", "all"):
        verdicts["dual"] = decide.robust_under_deletion(K, cycles, args.k)
    if method == "recursive" or (
        method == "all" and len({c.mask for c in cycles}) == 1
    ):
        verdicts["recursive"] = decide.is_k_boundant(K, cycles, args.k, "recursive")
    if len(set(verdicts.values())) > 1:
        raise decide.MethodDisagreement(
            f"k-boundance methods disagree: {verdicts}",
            reproducer={
                "complex": K.to_json(),
                "cycles": K.cycles_to_json(cycles),
                "k": args.k,
                "verdicts": verdicts,
            },
        )
    verdict = next(iter(verdicts.values()))
    if args.json:
        doc = {"k": args.k, "boundant": verdict, "methods": verdicts}
        if witness is not None:
            doc["witness"] = {
                "chains": [K.chain_to_json(c) for c in witness.chains],
                "assignment": list(witness.assignment),
            }
        _emit(doc, None)
    else:
        for name, value in verdicts.items():
            print(f"{name}: {'yes' if value else 'no'}")
        if witness is not None:
            for i, (chain, a) in enumerate(zip(witness.chains, witness.assignment)):
                print(f"  P{i+1} = {{{', '.join(K.ids_of(chain)) or ''}}} bounds cycle {a}")
    return 0 if verdict else 1


def cmd_max_boundance(args) -> int:
    K = load_complex(args.file)
    cycles = _load_cycles(K, args.cycles)
    value = decide.max_boundance(K, cycles, args.method)
    if value is UNBOUNDED:
        if args.json:
            _emit({"max_boundance": "unbounded"}, None)
        else:
            print("max boundance: UNBOUNDED")
        return 0
    doc: dict = {"max_boundance": value}
    witness = decide.disjoint_chains(K, cycles, value) if value > 0 else None
    if args.json:
        if witness is not None:
            doc["witness"] = {
                "chains": [K.chain_to_json(c) for c in witness.chains],
                "assignment": list(witness.assignment),
            }
        _emit(doc, None)
    else:
        print(f"max boundance: {value}")
        if witness is not None:
            for i, chain in enumerate(witness.chains):
                print(f"  P{i+1} = {{{', '.join(K.ids_of(chain))}}}")
    return 0


def cmd_cobordant(args) -> int:
    K = load_complex(args.file)
    cycles = _load_cycles(K, args.cycles)
    if len(cycles) != 2:
        raise ComplexError("cobordant expects a cycle file with exactly 2 cycles")
    verdict = decide.cobordant(K, cycles[0], cycles[1], args.k, args.method)
    print(f"{args.k}-cobordant: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_homology(args) -> int:
    K = load_complex(args.file)
    dims = [args.d] if args.d is not None else list(range(K.n + 1))
    values = {d: invariants.homology_dim(K, d, args.reduced) for d in dims}
    if args.json:
        _emit({"reduced": args.reduced, "homology": {str(d): v for d, v in values.items()}}, None)
    else:
        print(" ".join(f"H{d}={v}" for d, v in values.items()))
    return 0


def cmd_boundary(args) -> int:
    K = load_complex(args.file)
    chain = _load_chain(K, args.chain)
    bnd = K.boundary(chain)
    if chain.dim == 0:
        print(f"augmentation: {bnd.mask}")
    elif args.json:
        _emit({"boundary": K.chain_to_json(bnd)}, None)
    else:
        print(f"boundary: {_chain_str(K, bnd)}")
    return 0


def cmd_invariants(args) -> int:
    K = load_complex(args.file)
    ks = [int(x) for x in args.k.split(",")] if args.k else []
    skel = invariants.irregularity_skeleton(K)
    basis = invariants.gamma(K)
    reports = [invariants.gamma_k(K, k, args.method) for k in ks]
    if args.json:
        doc = {
            "sizes": {str(d): K.size(d) for d in range(K.n + 1)},
            "degrees": dict(sorted(Counter(K.degrees()).items())),
            "skeleton_sizes": {str(d): skel.size(d) for d in range(skel.n + 1)},
            "homology": {
                str(d): invariants.homology_dim(K, d) for d in range(K.n + 1)
            },
            "gamma_dim": len(basis),
            "gamma_basis": [K.chain_to_json(c) for c in basis],
            "gamma_k": [r.to_json(K) for r in reports],
        }
        _emit(doc, None)
        return 0
    print(f"degrees: {_degree_histogram(K)}")
    print("skeleton: " + " ".join(f"S{d}={skel.size(d)}" for d in range(skel.n + 1)))
    print(" ".join(f"H{d}={invariants.homology_dim(K, d)}" for d in range(K.n + 1)))
    print(f"gamma: dim={len(basis)}" + (
        " basis=" + "; ".join(_chain_str(K, c) for c in basis) if basis else ""
    ))
    for rep in reports:
        line = f"gamma_{rep.k}: closed={'yes' if rep.closed_under_addition else 'NO'}"
        if rep.k_dim is not None:
            line += f" dim={rep.k_dim}"
        else:
            line += f" elements={len(rep.elements)} (not a subspace)"
        print(line)
    return 0


def cmd_skeleton(args) -> int:
    K = load_complex(args.file)
    skel = invariants.irregularity_skeleton(K)
    _emit(skel.to_json(), args.o)
    return 0


def cmd_extract_path(args) -> int:
    K = load_complex(args.file)
    chain = _load_chain(K, args.chain)
    path = graphs.extract_path(K, chain, args.u, args.v)
    parts = [path.vertices[0]]
    for i, e in enumerate(path.edges):
        parts += [K.record(e).id, path.vertices[i + 1]]
    print(" ".join(parts))
    return 0


def cmd_edge_connectivity(args) -> int:
    K = load_complex(args.file)
    verdict = graphs.k_edge_connected_flow(K, args.u, args.v, args.k)
    print(f"{args.k}-edge-connected: {'yes' if verdict else 'no'}")
    return 0 if verdict else 1


def cmd_gen(args) -> int:
    params = {
        "k": args.k,
        "n": args.n,
        "v": args.v,
        "density": args.density,
        "seed": args.seed,
        "max_top": args.max_top,
    }
    needed = {
        "sheets": ("k",),
        "par-edges": ("k",),
        "hollow-simplex": ("n",),
        "tetra2": (),
        "tetra2-subdiv": (),
        "random": ("n", "v", "density", "seed"),
    }[args.family]
    for name in needed:
        if params[name] is None:
            raise ComplexError(f"family {args.family!r} requires --{name}")
    doc = generate.family(args.family, **{k: v for k, v in params.items() if v is not None})
    _emit(doc, args.o)
    return 0


def cmd_corpus(args) -> int:
    """Hunt for method disagreements over a seeded instance stream."""
    checked = 0
    for inst in corpus.instances(args.instances, args.seed):
        for k in range(1, args.max_k + 1):
            decide.is_k_boundant(inst.complex, inst.cycles, k, "all")
            checked += 1
    print(f"agreement on {checked} (instance, k) pairs")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boundance",
        description="F2 chain algebra, k-boundance decisions, and degree invariants",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, help="validate a complex file")
    p.add_argument("file")

    p = add("boundant", cmd_boundant, help="decide k-boundance of a cycle list")
    p.add_argument("file")
    p.add_argument("cycles")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=decide.METHODS, default="all")
    p.add_argument("--json", action="store_true")

    p = add("max-boundance", cmd_max_boundance, help="largest k with the list k-boundant")
    p.add_argument("file")
    p.add_argument("cycles")
    p.add_argument("--method", choices=("primal", "dual", "all"), default="primal")
    p.add_argument("--json", action="store_true")

    p = add("cobordant", cmd_cobordant, help="decide k-cobordance of two cycles")
    p.add_argument("file")
    p.add_argument("cycles")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("primal", "dual", "all"), default="primal")

    p = add("homology", cmd_homology, help="F2 homology dimensions")
    p.add_argument("file")
    p.add_argument("--d", type=int, default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--reduced", dest="reduced", action="store_true", default=True)
    group.add_argument("--unreduced", dest="reduced", action="store_false")
    p.add_argument("--json", action="store_true")

    p = add("boundary", cmd_boundary, help="boundary of a chain")
    p.add_argument("file")
    p.add_argument("chain")
    p.add_argument("--json", action="store_true")

    p = add("invariants", cmd_invariants, help="degree strata, homology, gammareports")
    p.add_argument("file")
    p.add_argument("--k", default="", help="comma-separated k values for gamma_k")
    p.add_argument("--method", choices=("primal", "dual", "all"), default="primal")
    p.add_argument("--json", action="store_true")

    p = add("skeleton", cmd_skeleton, help="irregularity skeleton as a complex file")
    p.add_argument("file")
    p.add_argument("--o", default=None)

    p = add("extract-path", cmd_extract_path, help="actual path inside a homological path")
    p.add_argument("file")
    p.add_argument("chain")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)

    p = add("edge-connectivity", cmd_edge_connectivity, help="max-flow edge connectivity oracle")
    p.add_argument("file")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("gen", cmd_gen, help="generate a fixture family")
    p.add_argument("family", choices=generate.FAMILIES)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--v", type=int, default=None)
    p.add_argument("--density", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-top", type=int, default=None, dest="max_top")
    p.add_argument("--o", default=None)

    p = add("corpus", cmd_corpus, help="run the method-agreement corpus")
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-k", type=int, default=4, dest="max_k")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        if exc.reproducer is not None:
            print(exc.reproducer_json(), file=sys.stderr)
        return 3
    except (ComplexError, ValueError, NoPath, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
