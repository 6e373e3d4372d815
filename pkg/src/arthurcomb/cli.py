"""Command-line front end: parse parameter files, run verifier sweeps,
emit deterministic reports.

Exit codes: 0 all verdicts pass, 1 at least one violation, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .params import (
    ArthurParameter,
    ClassicalGroup,
    ParameterError,
    arthur_parameter,
    block,
    canonical_offsets,
    component_group,
    dominate,
    good_parity,
    inf_char,
)
from .torus import transfer_infchar, translation_weight, uniqueness_check
from .twisted import (
    kostant_theta_invariance,
    theta_invariant_dominant_weights,
    verify_transfer_identity,
)
from .weyl import Weight, norm_sq, weight
from .aq import (
    LeviDatum,
    Sigma,
    aq_datum,
    enumerate_levis,
    filtration_vanishing,
    packet_data,
    range_check,
    translate_packet,
)
from .params import g_inf_char

SUITES = ("uniqueness", "twisted-trace", "filtration", "parity", "norms", "kostant", "all")


class SpecError(ValueError):
    pass


def _require_keys(obj: dict, allowed: set[str], context: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SpecError(f"unknown field(s) {sorted(unknown)} in {context}")


def _parse_half(value, context: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecError(f"{context}: half-integers must be integers or 'k'/'k/2' strings")
    try:
        f = Fraction(value)
    except (ValueError, TypeError) as exc:
        raise SpecError(f"{context}: cannot parse {value!r} as a half-integer") from exc
    if f.denominator not in (1, 2):
        raise SpecError(f"{context}: {value!r} is not a half-integer")
    return f


def parse_spec_data(data: dict) -> tuple[ArthurParameter, dict]:
    if not isinstance(data, dict):
        raise SpecError("spec file must contain a JSON object")
    _require_keys(data, {"group", "blocks", "options"}, "spec")
    gdata = data.get("group")
    if not isinstance(gdata, dict):
        raise SpecError("missing 'group' object")
    _require_keys(gdata, {"kind", "rank", "signature"}, "group")
    kind = gdata.get("kind")
    rank = gdata.get("rank")
    if kind not in ("Sp", "SOodd", "SOeven"):
        raise SpecError(f"group.kind must be Sp, SOodd or SOeven, got {kind!r}")
    if not isinstance(rank, int) or rank < 0:
        raise SpecError("group.rank must be a non-negative integer")
    signature = gdata.get("signature")
    if signature is not None:
        if (
            not isinstance(signature, list)
            or len(signature) != 2
            or not all(isinstance(x, int) for x in signature)
        ):
            raise SpecError("group.signature must be a pair of integers")
        signature = tuple(signature)
    try:
        group = ClassicalGroup(kind, rank, signature)
    except ParameterError as exc:
        raise SpecError(str(exc)) from exc

    bdata = data.get("blocks")
    if not isinstance(bdata, list) or not bdata:
        raise SpecError("missing 'blocks' list")
    blocks = []
    for i, bd in enumerate(bdata):
        if not isinstance(bd, dict):
            raise SpecError(f"blocks[{i}] must be an object")
        _require_keys(bd, {"t", "a", "eta", "mult"}, f"blocks[{i}]")
        if "t" not in bd or "a" not in bd:
            raise SpecError(f"blocks[{i}] needs fields 't' and 'a'")
        t = _parse_half(bd["t"], f"blocks[{i}].t")
        a = bd["a"]
        if not isinstance(a, int) or a < 1:
            raise SpecError(f"blocks[{i}].a must be a positive integer")
        eta = bd.get("eta", "+")
        if eta not in ("+", "-", "−"):
            raise SpecError(f"blocks[{i}].eta must be '+' or '-'")
        mult = bd.get("mult", 1)
        if not isinstance(mult, int) or mult < 1:
            raise SpecError(f"blocks[{i}].mult must be a positive integer")
        try:
            blocks.append(block(t, a, eta, mult))
        except ParameterError as exc:
            raise SpecError(f"blocks[{i}]: {exc}") from exc

    options = data.get("options", {})
    if not isinstance(options, dict):
        raise SpecError("'options' must be an object")
    _require_keys(
        options, {"offsets", "seed", "height_bound", "threshold", "trials"}, "options"
    )
    try:
        psi = arthur_parameter(group, blocks)
    except ParameterError as exc:
        raise SpecError(str(exc)) from exc
    return psi, dict(options)


def parse_spec(path: str) -> tuple[ArthurParameter, dict]:
    """Load and validate a parameter spec file; dimension errors are fatal."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from exc
    return parse_spec_data(data)


# ---------------------------------------------------------------------------
# report plumbing


def _fmt(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return f"{value:.2e}"
    if isinstance(value, Weight):
        return str(value)
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _input_hash(payload) -> str:
    canonical = json.dumps(_fmt(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def make_report(command: str, payload, seed, results: dict, verdicts: list[dict]) -> dict:
    return {
        "command": command,
        "input_hash": _input_hash(payload),
        "seed": seed,
        "results": _fmt(results),
        "verdicts": _fmt(verdicts),
        "version": __version__,
    }


def emit_report(report: dict, fmt: str = "json", out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=True, indent=1))
        out.write("\n")
        return
    out.write(f"# {report['command']}\n")
    out.write(f"version: {report['version']}  seed: {report['seed']}\n")
    out.write(f"input: {report['input_hash']}\n")
    for key in sorted(report["results"]):
        out.write(f"{key}: {json.dumps(report['results'][key], sort_keys=True)}\n")
    for v in report["verdicts"]:
        out.write(f"[{v['status'].upper():9s}] {v['check']}: {v['detail']}\n")
    overall = "pass" if _all_pass(report["verdicts"]) else "violation"
    out.write(f"overall: {overall}\n")


def _all_pass(verdicts: list[dict]) -> bool:
    return all(v["status"] == "pass" for v in verdicts)


def _verdict(check: str, ok: bool, detail: str) -> dict:
    return {"check": check, "status": "pass" if ok else "violation", "detail": detail}


# ---------------------------------------------------------------------------
# subcommand handlers


def _offsets_for(psi: ArthurParameter, args) -> list[int]:
    if getattr(args, "offsets", None):
        return [int(x) for x in args.offsets.split(",")] if isinstance(args.offsets, str) else list(args.offsets)
    return list(canonical_offsets(psi, getattr(args, "threshold", None)))


def _psi_payload(psi: ArthurParameter) -> dict:
    return {
        "group": {
            "kind": psi.group.kind,
            "rank": psi.group.rank,
            "signature": list(psi.group.signature) if psi.group.signature else None,
        },
        "blocks": [
            {"t": str(b.t), "a": b.a, "eta": "+" if b.eta == 1 else "-", "mult": b.mult}
            for b in psi.blocks
        ],
    }


def cmd_info(args) -> tuple[dict, list[dict]]:
    psi, _opts = parse_spec(args.spec)
    parity = good_parity(psi)
    results = {
        "parameter": str(psi),
        "dual_dim": psi.group.dual_dim,
        "dimension": sum(b.dim for b in psi.blocks),
        "good_parity": parity.ok,
        "parity_blocks": [
            {"block": str(r.block), "ok": r.ok, "reason": r.reason} for r in parity.blocks
        ],
    }
    verdicts = [_verdict("good-parity", parity.ok, "all blocks match the dual type" if parity.ok else "bad parity")]
    if parity.ok:
        grp = component_group(psi)
        results["component_group_order"] = grp.order
        results["s_psi"] = list(grp.s_psi)
    return results, verdicts


def cmd_infchar(args) -> tuple[dict, list[dict]]:
    psi, _opts = parse_spec(args.spec)
    gl = inf_char(psi, "GL")
    g = inf_char(psi, "G")
    results = {
        "gl_side": [str(x) for x in gl.entries],
        "g_side": [str(x) for x in g.entries],
    }
    return results, [_verdict("infchar", True, f"GL {gl} / G {g}")]


def cmd_dominate(args) -> tuple[dict, list[dict]]:
    psi, _opts = parse_spec(args.spec)
    offs = _offsets_for(psi, args)
    plus = dominate(psi, offs, args.threshold)
    results = {
        "offsets": offs,
        "dominating": _psi_payload(plus),
    }
    return results, [_verdict("dominate", True, str(plus))]


def cmd_translate(args) -> tuple[dict, list[dict]]:
    psi, _opts = parse_spec(args.spec)
    offs = _offsets_for(psi, args)
    plus = dominate(psi, offs, args.threshold)
    datum = translation_weight(psi, plus)
    results = {
        "offsets": offs,
        "lambda_GL": str(datum.lambda_GL),
        "lambda_G": str(datum.lambda_G),
    }
    return results, [_verdict("translate", True, f"lambda = {datum.lambda_GL}")]


def _parse_packet_file(path: str, psi_plus: ArthurParameter):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecError("packet file must contain a JSON object")
    _require_keys(data, {"entries"}, "packet")
    entries_data = data.get("entries")
    if not isinstance(entries_data, list):
        raise SpecError("packet.entries must be a list")
    entries = []
    for i, ed in enumerate(entries_data):
        if not isinstance(ed, dict):
            raise SpecError(f"entries[{i}] must be an object")
        _require_keys(ed, {"levi", "character", "sigma"}, f"entries[{i}]")
        ld = ed.get("levi")
        if not isinstance(ld, dict):
            raise SpecError(f"entries[{i}].levi must be an object")
        _require_keys(ld, {"unitary", "g0"}, f"entries[{i}].levi")
        unitary = tuple((int(p), int(q)) for p, q in ld.get("unitary", []))
        g0d = ld.get("g0")
        if not isinstance(g0d, dict):
            raise SpecError(f"entries[{i}].levi.g0 must be an object")
        _require_keys(g0d, {"kind", "rank", "signature"}, f"entries[{i}].levi.g0")
        sig = g0d.get("signature")
        g0 = ClassicalGroup(g0d["kind"], g0d["rank"], tuple(sig) if sig else None)
        levi = LeviDatum(unitary, g0)
        sd = ed.get("sigma") or {}
        if not isinstance(sd, dict):
            raise SpecError(f"entries[{i}].sigma must be an object")
        _require_keys(sd, {"label", "nu", "weakly_unipotent"}, f"entries[{i}].sigma")
        if sd.get("nu") is not None:
            nu = g_inf_char(g0.gside_type(), weight([_parse_half(x, "sigma.nu") for x in sd["nu"]]))
            sigma = Sigma(sd.get("label", "sigma"), nu, sd.get("weakly_unipotent", True))
            datum = aq_datum(psi_plus, levi, sigma)
        else:
            datum = aq_datum(psi_plus, levi)
            if "label" in sd or "weakly_unipotent" in sd:
                sigma = Sigma(sd.get("label", "sigma"), datum.sigma.nu_sigma, sd.get("weakly_unipotent", True))
                datum = aq_datum(psi_plus, levi, sigma)
        values = ed.get("character")
        if not isinstance(values, list) or not all(v in (1, -1) for v in values):
            raise SpecError(f"entries[{i}].character must be a list of +-1")
        entries.append((datum, tuple(values)))
    return packet_data(psi_plus, entries)


def cmd_packet(args) -> tuple[dict, list[dict]]:
    psi, _opts = parse_spec(args.spec)
    offs = _offsets_for(psi, args)
    plus = dominate(psi, offs, args.threshold)
    pk_plus = _parse_packet_file(args.plus_packet, plus)
    result = translate_packet(pk_plus, psi)
    results = {
        "offsets": offs,
        "kernel_order": result.kernel_order,
        "entries": [
            {"datum": d.label(), "character": list(v)} for d, v in result.packet.entries
        ],
        "vanishing": [
            {"datum": d.label(), "character": list(v), "note": "character nontrivial on kernel"}
            for d, v in result.vanishing
        ],
    }
    return results, [
        _verdict(
            "packet-translate",
            True,
            f"{len(result.packet.entries)} entries kept, {len(result.vanishing)} vanishing",
        )
    ]


# ---------------------------------------------------------------------------
# verify suites


def _suite_parity(psi: ArthurParameter) -> tuple[dict, list[dict]]:
    rep = good_parity(psi)
    results = {
        "parity_blocks": [
            {"block": str(r.block), "ok": r.ok, "reason": r.reason} for r in rep.blocks
        ]
    }
    bad = [r for r in rep.blocks if not r.ok]
    detail = "all blocks good" if rep.ok else f"{len(bad)} block(s) violate the criterion"
    return results, [_verdict("parity", rep.ok, detail)]


def _suite_uniqueness(psi: ArthurParameter, args) -> tuple[dict, list[dict]]:
    offs = _offsets_for(psi, args)
    plus = dominate(psi, offs, args.threshold)
    rep = uniqueness_check(psi, plus)
    results = {
        "offsets": offs,
        "rearrangements": rep.rearrangements,
        "aligned": str(rep.aligned),
        "matches": [str(m) for m in rep.matches],
    }
    return results, [
        _verdict(
            "uniqueness",
            rep.unique,
            f"{len(rep.matches)} match(es) among {rep.rearrangements} rearrangements",
        )
    ]


def _suite_norms(psi: ArthurParameter, args) -> tuple[dict, list[dict]]:
    import random

    rng = random.Random(args.seed)
    gt = psi.group.gside_type()
    failures = 0
    trials = args.trials
    for _ in range(trials):
        w = weight([Fraction(rng.randint(-14, 14), 2) for _ in range(psi.group.rank)])
        nu = g_inf_char(gt, w)
        glside = transfer_infchar(nu, psi.group)
        if norm_sq(Weight(glside.doubled)) != 2 * norm_sq(nu.weight):
            failures += 1
    nu_psi = inf_char(psi, "G")
    gl = transfer_infchar(nu_psi, psi.group)
    exact = norm_sq(Weight(gl.doubled)) == 2 * norm_sq(nu_psi.weight)
    results = {"trials": trials, "failures": failures, "nu_psi_doubles": exact}
    ok = failures == 0 and exact
    return results, [_verdict("norm-doubling", ok, f"{failures} failures in {trials} trials")]


def _suite_filtration(psi: ArthurParameter, args) -> tuple[dict, list[dict]]:
    offs = _offsets_for(psi, args)
    plus = dominate(psi, offs, args.threshold)
    levis = enumerate_levis(plus)
    height = args.height_bound if args.height_bound is not None else 2 * max(offs, default=0)
    total_viol = 0
    per_levi = []
    for levi in levis:
        d_plus = aq_datum(plus, levi)
        rep = filtration_vanishing(d_plus, psi, height)
        total_viol += len(rep.violations)
        per_levi.append(
            {
                "levi": str(levi),
                "range": range_check(d_plus).verdict,
                "enumerated": rep.enumerated,
                "dominant": rep.dominant_count,
                "violations": len(rep.violations),
                "certificates": rep.cert_weight_pairing and rep.cert_unitary_support,
                "truncated": rep.truncated,
            }
        )
    results = {"offsets": offs, "height_bound": height, "levis": per_levi}
    ok = total_viol == 0 and all(e["certificates"] for e in per_levi)
    return results, [_verdict("filtration", ok, f"{total_viol} violation(s) over {len(levis)} data")]


def _suite_twisted(args, workers: int) -> tuple[dict, list[dict]]:
    n = args.n
    if args.mu:
        mus = [weight([Fraction(x) for x in args.mu.split(",")])]
    else:
        mus = list(theta_invariant_dominant_weights(n, args.max_entry))

    def run(mu):
        rep = verify_transfer_identity(mu, args.endo_rank, args.trials, args.seed)
        return str(mu), rep.max_residual

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(run, mus))
    else:
        rows = [run(mu) for mu in mus]
    rows.sort()
    worst = max((r for _m, r in rows), default=0.0)
    results = {
        "n": n,
        "trials": args.trials,
        "cases": [{"mu": m, "residual": r} for m, r in rows],
        "max_residual": worst,
    }
    ok = worst <= 1e-9
    return results, [_verdict("twisted-trace", ok, f"max residual {worst:.2e} over {len(rows)} weight(s)")]


def _suite_kostant(args) -> tuple[dict, list[dict]]:
    n = args.n
    if args.mu:
        mus = [weight([Fraction(x) for x in args.mu.split(",")])]
    else:
        mus = list(theta_invariant_dominant_weights(n, args.max_entry))
    rows = [(str(mu), kostant_theta_invariance(n, mu)) for mu in mus]
    rows.sort()
    ok = all(r for _m, r in rows)
    results = {"n": n, "cases": [{"mu": m, "ok": r} for m, r in rows]}
    return results, [_verdict("kostant", ok, f"{len(rows)} weight(s) checked")]


def cmd_verify(args) -> tuple[dict, list[dict], object]:
    suite = args.suite
    results: dict = {}
    verdicts: list[dict] = []
    needs_spec = suite in ("uniqueness", "filtration", "parity", "norms", "all")
    psi = None
    spec_payload = None
    if needs_spec:
        if not args.spec:
            raise SpecError(f"suite {suite!r} requires --spec")
        psi, opts = parse_spec(args.spec)
        spec_payload = _psi_payload(psi)
        if args.seed is None and "seed" in opts:
            args.seed = opts["seed"]
        if args.offsets is None and "offsets" in opts:
            args.offsets = opts["offsets"]
        if args.height_bound is None and "height_bound" in opts:
            args.height_bound = opts["height_bound"]
        if args.threshold is None and "threshold" in opts:
            args.threshold = opts["threshold"]
    if args.seed is None:
        args.seed = 0
    payload = {
        "suite": suite,
        "spec": spec_payload,
        "offsets": args.offsets,
        "threshold": args.threshold,
        "trials": args.trials,
        "height_bound": args.height_bound,
        "n": args.n,
        "mu": args.mu,
        "max_entry": args.max_entry,
        "endo_rank": args.endo_rank,
    }

    def merge(name, rv):
        r, v = rv
        results[name] = r
        verdicts.extend(v)

    if suite in ("parity", "all"):
        merge("parity", _suite_parity(psi))
    bad_parity = psi is not None and not good_parity(psi).ok
    if suite in ("uniqueness", "all") and not bad_parity:
        merge("uniqueness", _suite_uniqueness(psi, args))
    if suite in ("norms", "all") and not bad_parity:
        merge("norms", _suite_norms(psi, args))
    if suite in ("filtration", "all") and not bad_parity:
        merge("filtration", _suite_filtration(psi, args))
    if suite in ("twisted-trace",):
        merge("twisted_trace", _suite_twisted(args, args.workers))
    if suite in ("kostant",):
        merge("kostant", _suite_kostant(args))
    if suite == "all":
        saved_n = args.n
        args.n = args.n or 4
        merge("twisted_trace", _suite_twisted(args, args.workers))
        merge("kostant", _suite_kostant(args))
        args.n = saved_n
    return results, verdicts, payload


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arthurcomb",
        description="Combinatorics of Arthur packet translation: computations and verifier sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, spec_required=True):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--spec", required=spec_required, help="parameter spec file (JSON)")
        p.add_argument("--offsets", help="comma-separated integer offsets", default=None)
        p.add_argument("--threshold", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)

    p_info = sub.add_parser("info", help="dimensions, parity, component group")
    add_common(p_info)
    p_infchar = sub.add_parser("infchar", help="infinitesimal characters")
    add_common(p_infchar)
    p_dom = sub.add_parser("dominate", help="build the dominating parameter")
    add_common(p_dom)
    p_tr = sub.add_parser("translate", help="translation weight data")
    add_common(p_tr)
    p_pk = sub.add_parser("packet", help="translate a packet given its dominating data")
    add_common(p_pk)
    p_pk.add_argument("--plus-packet", required=True, help="packet data for the dominating parameter")

    p_v = sub.add_parser("verify", help="run a verifier sweep")
    p_v.add_argument("suite", choices=SUITES)
    add_common(p_v, spec_required=False)
    p_v.add_argument("--trials", type=int, default=100)
    p_v.add_argument("--height-bound", dest="height_bound", type=int, default=None)
    p_v.add_argument("--n", type=int, default=None)
    p_v.add_argument("--mu", default=None, help="comma-separated weight entries")
    p_v.add_argument("--max-entry", dest="max_entry", type=int, default=2)
    p_v.add_argument("--endo-rank", dest="endo_rank", type=int, default=None)
    p_v.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            if args.suite in ("twisted-trace", "kostant") and args.n is None:
                raise SpecError(f"suite {args.suite!r} requires --n")
            if args.seed is None:
                args.seed = 0
            results, verdicts, payload = cmd_verify(args)
            report = make_report(f"verify {args.suite}", payload, args.seed, results, verdicts)
            emit_report(report, args.format)
            return 0 if _all_pass(verdicts) else 1
        handler = {
            "info": cmd_info,
            "infchar": cmd_infchar,
            "dominate": cmd_dominate,
            "translate": cmd_translate,
            "packet": cmd_packet,
        }[args.command]
        results, verdicts = handler(args)
        payload = {"command": args.command, "spec": args.spec}
        if args.spec:
            psi, _ = parse_spec(args.spec)
            payload["spec"] = _psi_payload(psi)
        seed = args.seed if args.seed is not None else 0
        report = make_report(args.command, payload, seed, results, verdicts)
        emit_report(report, args.format)
        return 0 if _all_pass(verdicts) else 1
    except (SpecError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
