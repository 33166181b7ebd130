"""
Built-in worked examples: three divergence-free flows in R^3 with their Hamiltonians, vectorial
Hamiltonians and Nambu bivectors, written in the expression grammar.
"""
from collections import namedtuple

from splitforms.cli.grammar import parse_flow, parse_form, parse_multivector, parse_scalar

AMBIENT_DIM = 3

WorkedExample = namedtuple('WorkedExample', ['number', 'title', 'texts'])

EXAMPLES = {
    1: WorkedExample(1, u"Rotating flow with two quadratic Hamiltonians", {
        'flow': u"-x*z, y*z, x^2 - y^2",
        'H': u"1/2 (x^2 + y^2 + z^2)",
        'F': u"x*y",
        'h': u"1/4 ((-x^2 y + y^3 + y z^2) dx + (x^3 - y^2 x + x z^2) dy - 2 x y z dz)",
        'X_H': u"z Dx/\\Dy + x Dy/\\Dz + y Dz/\\Dx",
        'X_F': u"y Dy/\\Dz + x Dz/\\Dx",
    }),
    2: WorkedExample(2, u"Flow conserving the sphere and a shifted quadric", {
        'flow': u"y - z, -x + x z, x - x y",
        'H': u"1/2 (x^2 + y^2 + z^2)",
        'F': u"(y - y^2/2) + (z - z^2/2)",
        'h': u"(x/4 (z^2 + y^2) - x/3 (z + y)) dx + (1/3 (x^2 - y z + z^2) - 1/4 x^2 y) dy"
             u" + (1/3 (y^2 - z y + x^2) - 1/4 x^2 z) dz",
        'X_H': u"z Dx/\\Dy + x Dy/\\Dz + y Dz/\\Dx",
        'X_F': u"(1 - z) Dx/\\Dy + (1 - y) Dz/\\Dx",
    }),
    # the printed h carries "3y˛", read here as 3y^2; Theta is the prehamiltonian form as printed and
    # Theta' = -z dx - x dz = d(-xz) is the form that actually splits dh
    3: WorkedExample(3, u"Flow with a Pfaffian prehamiltonian form", {
        'flow': u"x y, x - z, -z y",
        'H': u"x - y^2/2 + z",
        'G': u"-x z",
        'h': u"1/12 (z (3 y^2 + 4 x - 4 z) dx - 6 x y z dy + x (3 y^2 + 4 z - 4 x) dz)",
        'Theta': u"-z dx + x dz",
        'Theta_prime': u"-z dx - x dz",
        'g': u"1/(x^2 + z^2)",
        'X_H': u"Dx/\\Dy + Dy/\\Dz - y Dz/\\Dx",
    }),
}

PARSERS = {
    'flow': parse_flow,
    'H': parse_scalar,
    'F': parse_scalar,
    'G': parse_scalar,
    'g': parse_scalar,
    'h': parse_form,
    'Theta': parse_form,
    'Theta_prime': parse_form,
    'X_H': parse_multivector,
    'X_F': parse_multivector,
}


def example_numbers():
    # type: () -> list
    return sorted(EXAMPLES)


def load_example(number):
    # type: (int) -> dict
    """
    Parse every constant of a worked example.
    :param number: 1, 2 or 3
    :return: dict of name -> kernel value (PhaseFlow, Polynomial, RationalFunction, DifferentialForm, MultiVector)
    """
    if number not in EXAMPLES:
        raise KeyError(u"No worked example {}; choose one of {}".format(number, example_numbers()))
    return {name: PARSERS[name](text, AMBIENT_DIM) for name, text in EXAMPLES[number].texts.items()}
