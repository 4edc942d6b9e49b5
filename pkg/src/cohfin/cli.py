"""Command-line client for the law-suite service.

By default every subcommand calls the FastAPI app in-process; ``--url``
points it at a running server instead (start one with ``cohfin serve``).
Exit status: 0 when all checks pass, 1 on a law violation or failed
verification, 2 on usage errors.
"""

from __future__ import annotations

import json
import sys
from typing import Optional

import click


class ServiceClient:
    def __init__(self, url: Optional[str] = None):
        if url:
            import httpx

            self._client = httpx.Client(base_url=url, timeout=300.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._client = TestClient(app)

    def post(self, path: str, payload: dict) -> dict:
        resp = self._client.post(path, json=payload)
        if resp.status_code == 422:
            detail = resp.json().get("detail", resp.text)
            raise click.UsageError(str(detail))
        resp.raise_for_status()
        return resp.json()


def _emit(report: dict, fmt: str, out: Optional[str]) -> None:
    if fmt == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    elif fmt == "dot":
        if "dot" not in report:
            raise click.UsageError("this report has no DOT rendering")
        text = report["dot"]
    elif fmt == "csv":
        text = _render_csv(report)
    else:
        text = _render_text(report)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _render_text(report: dict) -> str:
    lines = [f"suite: {report.get('suite', '?')}"]
    for key in ("value", "omega", "alpha", "web_size"):
        if key in report:
            lines.append(f"{key}: {report[key]}")
    for row in report.get("table", []):
        lines.append("  " + json.dumps(row, sort_keys=True))
    for res in report.get("results", []):
        status = "PASS" if res["pass"] else "FAIL"
        lines.append(f"[{status}] {res['law']}")
        if res.get("witness") is not None:
            lines.append("    witness: "
                         + json.dumps(res["witness"], sort_keys=True))
    lines.append(f"overall: {'PASS' if report.get('pass') else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _render_csv(report: dict) -> str:
    for key, header in (("growth_profile", "n,omega,alpha"),
                        ("cover_growth", "n,cover_lower_bound"),
                        ("edit_comparison", "n,alpha_diff,omega_diff")):
        if key in report:
            rows = report[key]
            return "\n".join([header] + [",".join(str(x) for x in r)
                                         for r in rows]) + "\n"
    raise click.UsageError("this report has no CSV rendering")


def _finish(report: dict, fmt: str, out: Optional[str]) -> None:
    _emit(report, fmt, out)
    sys.exit(0 if report.get("pass", False) else 1)


_format_option = click.option(
    "--format", "fmt", type=click.Choice(["json", "text", "dot", "csv"]),
    default="json", show_default=True)
_out_option = click.option("--out", default=None,
                           help="Write the report to a file.")
_url_option = click.option("--url", default=None,
                           help="Base URL of a running service; defaults "
                                "to in-process execution.")


@click.group()
def main() -> None:
    """Law suites and witness searches over finite coherent spaces."""


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


@main.command()
@click.argument("expr")
@_format_option
@_out_option
@_url_option
def space(expr: str, fmt: str, out: Optional[str], url: Optional[str]) -> None:
    """Build a named space, e.g. 'tensor(complete(2), discrete(2))'."""
    report = ServiceClient(url).post("/space", {"expr": expr})
    _finish(report, fmt, out)


@main.command()
@click.option("--max-n", default=5, show_default=True)
@click.option("--m", default=1, show_default=True)
@click.option("--k", default=1, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--cases", default=100, show_default=True)
@_format_option
@_out_option
@_url_option
def laws(max_n: int, m: int, k: int, seed: int, cases: int, fmt: str,
         out: Optional[str], url: Optional[str]) -> None:
    """Exhaustive and seeded law suites for the bounded dual operators."""
    report = ServiceClient(url).post(
        "/laws", {"max_n": max_n, "m": m, "k": k, "seed": seed,
                  "cases": cases})
    _finish(report, fmt, out)


@main.group()
def ramsey() -> None:
    """Ramsey bounds, exact small values, witness extraction."""


@ramsey.command("upper")
@click.argument("sizes", nargs=-1, type=int, required=True)
@_format_option
@_out_option
@_url_option
def ramsey_upper_cmd(sizes, fmt, out, url) -> None:
    report = ServiceClient(url).post("/ramsey/upper", {"sizes": list(sizes)})
    _finish(report, fmt, out)


@ramsey.command("exact")
@click.argument("sizes", nargs=2, type=int)
@click.option("--budget", default=6, show_default=True)
@_format_option
@_out_option
@_url_option
def ramsey_exact_cmd(sizes, budget, fmt, out, url) -> None:
    report = ServiceClient(url).post(
        "/ramsey/exact", {"sizes": list(sizes), "budget": budget})
    _finish(report, fmt, out)


@ramsey.command("find")
@click.argument("sizes", nargs=-1, type=int, required=True)
@click.option("--n", "n", type=int, required=True,
              help="Vertex count of the random coloring.")
@click.option("--seed", default=0, show_default=True)
@_format_option
@_out_option
@_url_option
def ramsey_find_cmd(sizes, n, seed, fmt, out, url) -> None:
    report = ServiceClient(url).post(
        "/ramsey/find", {"sizes": list(sizes), "n": n, "seed": seed,
                         "colors": len(sizes)})
    _finish(report, fmt, out)


@main.command()
@click.option("--cases", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--k", default=2, show_default=True)
@_format_option
@_out_option
@_url_option
def functor(cases, seed, k, fmt, out, url) -> None:
    """Category-law checks and the non-fullness witness search."""
    report = ServiceClient(url).post(
        "/functor", {"cases": cases, "seed": seed, "k": k})
    _finish(report, fmt, out)


@main.command()
@click.option("--n-max", default=8, show_default=True)
@click.option("--degree", default=4, show_default=True)
@_format_option
@_out_option
@_url_option
def bang(n_max, degree, fmt, out, url) -> None:
    """Exponential-web counting table (complete graphs vs their duals)."""
    report = ServiceClient(url).post(
        "/bang", {"n_max": n_max, "degree": degree})
    _finish(report, fmt, out)


@main.command()
@click.option("--family", default="blocks_kn", show_default=True)
@click.option("--blocks", default=6, show_default=True)
@click.option("--depth", default=50, show_default=True)
@_format_option
@_out_option
@_url_option
def presented(family, blocks, depth, fmt, out, url) -> None:
    """Growth/cover profiles, certificate checks, edit comparison."""
    report = ServiceClient(url).post(
        "/presented", {"family": family, "blocks": blocks, "depth": depth})
    _finish(report, fmt, out)


@main.command()
@click.option("--k", default=2, show_default=True)
@click.option("--max-n", default=4, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--cases", default=50, show_default=True)
@click.option("--s", default=3, show_default=True)
@_format_option
@_out_option
@_url_option
def nonuniform(k, max_n, seed, cases, s, fmt, out, url) -> None:
    """Variant failure searches and three-color trichotomy extraction."""
    report = ServiceClient(url).post(
        "/nonuniform", {"k": k, "max_n": max_n, "seed": seed,
                        "cases": cases, "s": s})
    _finish(report, fmt, out)


@main.command()
@click.option("--words", "words_json", default=None,
              help="JSON object {\"first\": [...], \"second\": [...]} of "
                   "{prefix, period} words; a small demo pair when omitted.")
@_format_option
@_out_option
@_url_option
def prop21(words_json, fmt, out, url) -> None:
    """Separation demo on two sets of eventually periodic words."""
    if words_json is None:
        payload = {
            "first": [{"prefix": "", "period": "0"}],
            "second": [{"prefix": "", "period": "1"}],
        }
    else:
        try:
            payload = json.loads(words_json)
        except json.JSONDecodeError as exc:
            raise click.UsageError(f"bad words JSON: {exc}") from exc
        if not isinstance(payload, dict) or \
                set(payload) != {"first", "second"}:
            raise click.UsageError(
                "words JSON must have exactly the keys 'first' and 'second'")
    report = ServiceClient(url).post("/prop21", payload)
    _finish(report, fmt, out)


if __name__ == "__main__":
    main()
