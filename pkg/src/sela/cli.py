"""Command-line front end.

Each subcommand builds a request, sends it to the HTTP service (in-process
by default, or a remote instance via --server) and renders the report.
Exit codes: 0 certified, 2 stable, 3 inconclusive, 1 error.
"""

import json
import sys

import click
import httpx

EXIT = {"certified": 0, "certified-zero": 0, "pass": 0, "skipped": 0,
        "stable": 2, "inconclusive": 3}


def _client(server):
    if server:
        return httpx.Client(base_url=server, timeout=None)
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
    from .service import app
    return TestClient(app)


def _post(ctx, path, payload):
    with _client(ctx.obj.get("server")) as client:
        resp = client.post(path, json=payload)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        click.echo("error: %s" % detail, err=True)
        sys.exit(1)
    return resp.json()


def _exit_code(report):
    codes = [EXIT.get(c["status"], 1) for c in report["claims"]]
    return max(codes, default=1)


def _emit(ctx, report):
    if ctx.obj.get("json"):
        text = json.dumps(report, indent=2, sort_keys=False)
    else:
        lines = ["%s:" % report["command"]]
        for c in report["claims"]:
            lines.append("  [%s] %s" % (c["status"], c["tag"]))
            data = c["data"]
            if isinstance(data, dict):
                for k, v in data.items():
                    if k in ("cases", "weights"):
                        lines.append("    %s: %d entries" % (k, len(v)))
                    else:
                        lines.append("    %s: %s" % (k, v))
        lines.append("  (%.3fs)" % report["timing"]["seconds"])
        text = "\n".join(lines)
    out = ctx.obj.get("output")
    if out:
        with open(out, "w") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    click.echo(text)
    sys.exit(_exit_code(report))


def _parse_lambda(_ctx, _param, value):
    if value is None:
        return None
    try:
        coords = [int(t) for t in value.split(",")]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers")
    if any(c < 0 for c in coords):
        raise click.BadParameter("coordinates must be nonnegative")
    return coords


@click.group()
@click.option("--server", default=None,
              help="Base URL of a running service; in-process by default.")
@click.option("--json", "as_json", is_flag=True, help="Machine output.")
@click.option("--output", type=click.Path(dir_okay=False), default=None,
              help="Also write the JSON report to this path.")
@click.option("-v", "--verbose", count=True)
@click.pass_context
def main(ctx, server, as_json, output, verbose):
    """Exact-arithmetic checks for sl_n over associative coefficients."""
    ctx.ensure_object(dict)
    ctx.obj.update(server=server, json=as_json, output=output,
                   verbose=verbose)


@main.command()
@click.option("--algebra", required=True, help="matrix:2, truncpoly:3, "
              "quaternion:1,-1, field, or a JSON file/string.")
@click.option("--ell", type=int, default=1, show_default=True)
@click.pass_context
def tsa(ctx, algebra, ell):
    """Symmetric tensor space: dimension, basis labels, center."""
    _emit(ctx, _post(ctx, "/tsa", {"algebra": algebra, "ell": ell}))


@main.command()
@click.option("--algebra", required=True)
@click.option("--map", "map_name", default="sym", show_default=True,
              type=click.Choice(["sym", "trace", "identity"]))
@click.option("--ell", type=int, default=1, show_default=True)
@click.option("--order", type=int, default=None,
              help="Identity order; defaults to ell + 1.")
@click.option("--samples", type=int, default=80, show_default=True)
@click.pass_context
def symcheck(ctx, algebra, map_name, ell, order, samples):
    """Test a map against the symmetric identity, two ways."""
    _emit(ctx, _post(ctx, "/symcheck",
                     {"algebra": algebra, "map": map_name, "ell": ell,
                      "order": order, "samples": samples}))


@main.command()
@click.option("--algebra", required=True)
@click.option("--n", type=int, default=2, show_default=True)
@click.option("--lambda", "lam", required=True, callback=_parse_lambda,
              help="Comma-separated nonnegative coordinates.")
@click.option("--scalar", default="qq", show_default=True,
              type=click.Choice(["qq", "fp"]))
@click.option("--prime", "primes", type=int, multiple=True,
              help="Primes for fp mode (repeatable).")
@click.option("--n-max", "n_max", type=int, default=None)
@click.option("--relaxed/--no-relaxed", default=True)
@click.option("--witness", default="auto", show_default=True,
              type=click.Choice(["auto", "none"]))
@click.pass_context
def seligman(ctx, algebra, n, lam, scalar, primes, n_max, relaxed, witness):
    """Level-bounded quotient of U(L0): dimension and certification."""
    payload = {"algebra": algebra, "n": n, "lam": lam, "scalar": scalar,
               "relaxed": relaxed, "witness": witness}
    if primes:
        payload["primes"] = list(primes)
    if n_max is not None:
        payload["N_max"] = n_max
    _emit(ctx, _post(ctx, "/seligman", payload))


@main.command()
@click.option("--algebra", required=True)
@click.option("--n", type=int, default=2, show_default=True)
@click.option("--lambda", "lam", required=True, callback=_parse_lambda)
@click.option("--depth", type=int, default=None)
@click.option("--ann-n", "ann_n", type=int, default=None,
              help="Also compare the annihilator with the ideal window.")
@click.pass_context
def weyl(ctx, algebra, n, lam, depth, ann_n):
    """Highest-weight module slice: weight dimensions."""
    _emit(ctx, _post(ctx, "/weyl",
                     {"algebra": algebra, "n": n, "lam": lam,
                      "depth": depth, "ann_N": ann_n}))


@main.command("verify-all")
@click.option("--quick", is_flag=True,
              help="Trimmed profile: levels <= 2, coefficients dim <= 4.")
@click.option("--scalar", default="qq", show_default=True,
              type=click.Choice(["qq", "fp"]))
@click.option("--prime", "primes", type=int, multiple=True)
@click.pass_context
def verify_all(ctx, quick, scalar, primes):
    """Run the whole verification suite and aggregate the claims."""
    payload = {"quick": quick, "scalar": scalar}
    if primes:
        payload["primes"] = list(primes)
    _emit(ctx, _post(ctx, "/verify", payload))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn
    uvicorn.run("sela.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
