"""Entry point for the psiab package."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.logging import RichHandler

from .cli.app import PsiabApp
from .cli.commands import EVAL_TARGETS, FIGURE_IDS, RADIUS_KINDS, VERIFY_SUITES
from .models.params import Mode
from .models.run import RunConfig
from .utils.text import parse_complex


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='store_true', help='Log solver details to stderr')
    common.add_argument('--mode', choices=[m.value for m in Mode], help='sym (A=-B=alpha) or conj (B=conj A)')
    common.add_argument('--alpha', type=float, default=0.5, help='|A|, in (0, 1]')
    common.add_argument('--gamma', type=float, help='arg A in (0, pi/2] for conj mode')
    common.add_argument('--samples', type=int, help='Boundary and circle samples (>= 64)')
    common.add_argument('--output', type=Path, help='Output file, or directory for figures')
    common.add_argument('--format', choices=['json', 'csv'], default='json')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='psiab',
        description='psiab - radius problems for the log-quotient class F[A, B]',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_eval = sub.add_parser('eval', parents=[common], help='Evaluate one quantity')
    p_eval.add_argument('target', choices=EVAL_TARGETS)
    p_eval.add_argument('--z', type=_complex_arg, help='Point as "re,im"')
    p_eval.add_argument('--n', type=int, default=1, help='Coefficient index')
    p_eval.add_argument('--r', type=float, help='Radius')
    p_eval.add_argument('--center', type=float, help='Real disk center for the disk target')
    p_eval.add_argument('--C', type=float, help='Janowski parameter C')
    p_eval.add_argument('--D', type=float, help='Janowski parameter D')
    p_eval.add_argument('--offset', type=float, default=0.0, help='Domain offset (1 for 1 + psi)')

    p_radius = sub.add_parser('radius', parents=[common], help='Compute a sharp radius')
    p_radius.add_argument('target', choices=RADIUS_KINDS)
    p_radius.add_argument('--delta', type=float, default=0.0, help='Starlikeness order')
    p_radius.add_argument('--beta', type=float, default=0.5, help='Strong starlikeness order')
    p_radius.add_argument('--alpha-class', type=float, help='Booth/cissoid parameter (default --alpha)')
    p_radius.add_argument('--decoupled', action='store_true', help='Allow --alpha-class != --alpha')

    p_figure = sub.add_parser('figure', parents=[common], help='Write figure data as CSV')
    p_figure.add_argument('target', choices=FIGURE_IDS)
    p_figure.add_argument('--grid', type=int, default=50, help='Surface grid size per axis')
    p_figure.add_argument('--alpha-class', type=float, help='Booth/cissoid parameter (default --alpha)')
    p_figure.add_argument('--decoupled', action='store_true', help='Allow --alpha-class != --alpha')

    p_verify = sub.add_parser('verify', parents=[common], help='Run acceptance suites')
    p_verify.add_argument('target', nargs='?', default='all', choices=VERIFY_SUITES)
    p_verify.add_argument('--report', action='store_true', help='Also emit the checks as a JSON record')

    return parser


def to_run_config(args: argparse.Namespace) -> RunConfig:
    """Translate parsed arguments into a RunConfig."""
    values = vars(args)
    return RunConfig(
        command=args.command,
        target=args.target,
        mode=Mode(args.mode) if args.mode else None,
        alpha=args.alpha,
        gamma=args.gamma,
        z=values.get('z'),
        n=values.get('n', 1),
        r=values.get('r'),
        delta=values.get('delta', 0.0),
        beta=values.get('beta', 0.5),
        alpha_class=values.get('alpha_class'),
        coupled=not values.get('decoupled', False),
        C=values.get('C'),
        D=values.get('D'),
        center=values.get('center'),
        offset=values.get('offset', 0.0),
        samples=args.samples,
        grid=values.get('grid', 50),
        output=args.output,
        format=args.format,
        report=values.get('report', False),
    )


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the psiab package."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)
    try:
        app = PsiabApp(to_run_config(args))
        return app.run()
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
