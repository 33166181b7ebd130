"""
Expression grammar for scalars, forms and multivectors.

    expr    := wedge (('+' | '-') wedge)*
    wedge   := product ('/\\' product)*
    product := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' nat)?
    atom    := nat | var | 'd' var | 'D' var | '(' expr ')'
    var     := 'x' nat | 'x' | 'y' | 'z'

``/\\`` is the wedge and ``^`` the scalar power, so the grammar stays LL(1). Basis elements ``dx`` are
differentials and ``Dx`` are coordinate vector fields.
"""
import logging
import re
from collections import namedtuple

from splitforms.kernel.coeffs import Polynomial, RationalFunction
from splitforms.kernel.constants import ALIASES_3D
from splitforms.kernel.dynamics import PhaseFlow
from splitforms.kernel.exceptions import (
    DegreeMismatchException,
    ExpressionSyntaxException,
    TypeMismatchException,
    UnknownVariableException,
)
from splitforms.kernel.exterior import DifferentialForm, GradedTensor, MultiVector, wedge

logger = logging.getLogger(__name__)

Token = namedtuple('Token', ['kind', 'text', 'offset'])

TOKEN_PATTERNS = [
    ('SPACE', r'\s+'),
    ('WEDGE', r'/\\'),
    ('NUMBER', r'\d+'),
    ('DIFF', r'd(?:x\d+|[A-Za-z])'),
    ('VEC', r'D(?:x\d+|[A-Za-z])'),
    ('VAR', r'x\d+|[A-Za-z]'),
    ('PLUS', r'\+'),
    ('MINUS', r'-'),
    ('STAR', r'\*'),
    ('SLASH', r'/'),
    ('CARET', r'\^'),
    ('LPAREN', r'\('),
    ('RPAREN', r'\)'),
]
TOKEN_REGEX = re.compile(u'|'.join(u'(?P<{}>{})'.format(kind, pattern) for kind, pattern in TOKEN_PATTERNS))

IMPLICIT_STARTS = ('NUMBER', 'VAR', 'DIFF', 'VEC', 'LPAREN')


def _position(text, offset):
    line = text.count(u'\n', 0, offset) + 1
    column = offset - (text.rfind(u'\n', 0, offset) + 1) + 1
    return line, column


def tokenize(text):
    # type: (str) -> list
    tokens = []
    offset = 0
    while offset < len(text):
        match = TOKEN_REGEX.match(text, offset)
        if match is None:
            line, column = _position(text, offset)
            raise ExpressionSyntaxException(u"Unexpected character {!r}".format(text[offset]), line, column)
        if match.lastgroup != 'SPACE':
            tokens.append(Token(match.lastgroup, match.group(), offset))
        offset = match.end()
    tokens.append(Token('END', u'', len(text)))
    return tokens


class ExpressionAst(object):
    """
    A parsed expression. ``kind`` is one of rational, variable, differential, vector, sum, product,
    quotient, power, negate, wedge. Sums keep one sign per child.
    """

    def __init__(self, kind, value=None, children=(), signs=(), offset=0):
        self.kind = kind
        self.value = value
        self.children = tuple(children)
        self.signs = tuple(signs)
        self.offset = offset

    def __eq__(self, other):
        if not isinstance(other, ExpressionAst):
            return NotImplemented
        return (self.kind, self.value, self.children, self.signs) == \
               (other.kind, other.value, other.children, other.signs)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.kind, self.value, self.children, self.signs))

    def __repr__(self):
        return u"ExpressionAst({!r}, {!r}, {!r}, {!r})".format(self.kind, self.value, self.children, self.signs)


class Parser(object):
    """Recursive-descent parser producing an ExpressionAst."""

    def __init__(self, text):
        # type: (str) -> None
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def _advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message, token=None):
        token = token or self.current
        line, column = _position(self.text, token.offset)
        return ExpressionSyntaxException(message, line, column)

    def _expect(self, kind):
        if self.current.kind != kind:
            found = self.current.text or u'end of input'
            raise self._error(u"Expected {} but found {!r}".format(kind, found))
        return self._advance()

    def parse(self):
        # type: () -> ExpressionAst
        if self.current.kind == 'END':
            raise self._error(u"Empty expression")
        node = self._sum()
        if self.current.kind != 'END':
            raise self._error(u"Unexpected {!r}".format(self.current.text))
        return node

    def _sum(self):
        start = self.current.offset
        children = [self._wedge()]
        signs = [1]
        while self.current.kind in ('PLUS', 'MINUS'):
            signs.append(1 if self._advance().kind == 'PLUS' else -1)
            children.append(self._wedge())
        if len(children) == 1:
            return children[0]
        return ExpressionAst('sum', children=children, signs=signs, offset=start)

    def _wedge(self):
        node = self._product()
        while self.current.kind == 'WEDGE':
            token = self._advance()
            node = ExpressionAst('wedge', children=(node, self._product()), offset=token.offset)
        return node

    def _product(self):
        node = self._unary()
        while True:
            kind = self.current.kind
            if kind == 'STAR':
                token = self._advance()
                node = ExpressionAst('product', children=(node, self._unary()), offset=token.offset)
            elif kind == 'SLASH':
                token = self._advance()
                node = ExpressionAst('quotient', children=(node, self._unary()), offset=token.offset)
            elif kind in IMPLICIT_STARTS:
                offset = self.current.offset
                node = ExpressionAst('product', children=(node, self._unary()), offset=offset)
            else:
                return node

    def _unary(self):
        if self.current.kind == 'MINUS':
            token = self._advance()
            return ExpressionAst('negate', children=(self._unary(),), offset=token.offset)
        if self.current.kind == 'PLUS':
            self._advance()
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        if self.current.kind == 'CARET':
            token = self._advance()
            exponent = self._expect('NUMBER')
            return ExpressionAst('power', value=int(exponent.text), children=(base,), offset=token.offset)
        return base

    def _atom(self):
        token = self.current
        if token.kind == 'NUMBER':
            self._advance()
            return ExpressionAst('rational', value=int(token.text), offset=token.offset)
        if token.kind == 'VAR':
            self._advance()
            return ExpressionAst('variable', value=token.text, offset=token.offset)
        if token.kind == 'DIFF':
            self._advance()
            return ExpressionAst('differential', value=token.text[1:], offset=token.offset)
        if token.kind == 'VEC':
            self._advance()
            return ExpressionAst('vector', value=token.text[1:], offset=token.offset)
        if token.kind == 'LPAREN':
            self._advance()
            node = self._sum()
            self._expect('RPAREN')
            return node
        raise self._error(u"Unexpected {!r}".format(token.text or u'end of input'))


def parse_ast(text):
    # type: (str) -> ExpressionAst
    return Parser(text).parse()


PRECEDENCE = {'sum': 1, 'wedge': 2, 'product': 3, 'quotient': 3, 'negate': 4, 'power': 5}


def format_ast(node):
    # type: (ExpressionAst) -> str
    """
    Print an AST so that parsing the text gives back an equal AST.
    """
    kind = node.kind
    if kind == 'rational':
        return str(node.value)
    if kind == 'variable':
        return node.value
    if kind == 'differential':
        return u'd' + node.value
    if kind == 'vector':
        return u'D' + node.value
    if kind == 'sum':
        pieces = []
        for position, (sign, child) in enumerate(zip(node.signs, node.children)):
            text = _wrap(child, PRECEDENCE['sum'] + 1)
            if position == 0:
                pieces.append(text)
            else:
                pieces.append((u' + ' if sign > 0 else u' - ') + text)
        return u''.join(pieces)
    if kind == 'negate':
        return u'-' + _wrap(node.children[0], PRECEDENCE['negate'])
    if kind == 'power':
        return u'{}^{}'.format(_wrap(node.children[0], PRECEDENCE['power'] + 1), node.value)
    operator = {'wedge': u' /\\ ', 'product': u'*', 'quotient': u'/'}[kind]
    left, right = node.children
    level = PRECEDENCE[kind]
    return _wrap(left, level) + operator + _wrap(right, level + 1)


def _wrap(node, level):
    text = format_ast(node)
    if node.kind in PRECEDENCE and PRECEDENCE[node.kind] < level:
        return u'({})'.format(text)
    return text


class ExpressionEvaluator(object):
    """
    Turns an ExpressionAst into kernel values in a fixed ambient dimension, enforcing the typing rules:
    wedges combine forms (or multivectors), powers apply to scalars.
    """

    def __init__(self, ambient_dim, text=u''):
        # type: (int, str) -> None
        self.ambient_dim = ambient_dim
        self.text = text

    def _error(self, cls, message, node):
        line, column = _position(self.text, node.offset) if self.text else (1, node.offset + 1)
        return cls(message, line, column)

    def axis(self, name, node):
        # type: (str, ExpressionAst) -> int
        n = self.ambient_dim
        if n == 3 and name in ALIASES_3D:
            return ALIASES_3D.index(name)
        match = re.match(r'^x(\d+)$', name)
        if match and 1 <= int(match.group(1)) <= n:
            return int(match.group(1)) - 1
        raise self._error(UnknownVariableException, u"Unknown variable {!r} in dimension {}".format(name, n), node)

    def evaluate(self, node):
        # type: (ExpressionAst) -> object
        handler = getattr(self, '_eval_' + node.kind)
        return handler(node)

    def _eval_rational(self, node):
        return RationalFunction.constant(self.ambient_dim, node.value)

    def _eval_variable(self, node):
        return RationalFunction(Polynomial.variable(self.ambient_dim, self.axis(node.value, node)))

    def _eval_differential(self, node):
        return DifferentialForm.differential(self.ambient_dim, self.axis(node.value, node))

    def _eval_vector(self, node):
        return MultiVector.basis(self.ambient_dim, (self.axis(node.value, node),))

    def _eval_negate(self, node):
        return -self.evaluate(node.children[0])

    def _eval_power(self, node):
        base = self.evaluate(node.children[0])
        if isinstance(base, GradedTensor):
            raise self._error(TypeMismatchException, u"Powers apply to scalars only; use /\\ for forms", node)
        return base ** node.value

    def _eval_sum(self, node):
        total = None
        for sign, child in zip(node.signs, node.children):
            value = self.evaluate(child)
            if sign < 0:
                value = -value
            total = value if total is None else self._add(total, value, child)
        return total

    def _add(self, left, right, node):
        left_tensor = isinstance(left, GradedTensor)
        right_tensor = isinstance(right, GradedTensor)
        if not left_tensor and not right_tensor:
            return left + right
        if left_tensor and right_tensor:
            if type(left) is not type(right):
                raise self._error(TypeMismatchException, u"Cannot add a form and a multivector", node)
            try:
                return left + right
            except DegreeMismatchException as exc:
                raise self._error(TypeMismatchException, str(exc), node)
        tensor, scalar = (left, right) if left_tensor else (right, left)
        if scalar.is_zero():
            return tensor
        if tensor.is_zero() or tensor.degree == 0:
            return tensor + type(tensor).scalar(scalar)
        raise self._error(TypeMismatchException, u"Cannot add a scalar to a degree {} value".format(tensor.degree),
                          node)

    def _eval_product(self, node):
        left, right = (self.evaluate(child) for child in node.children)
        if isinstance(left, GradedTensor) and isinstance(right, GradedTensor):
            if left.degree == 0 and isinstance(left, DifferentialForm):
                return right.scale(left.coefficient(()))
            if right.degree == 0 and isinstance(right, DifferentialForm):
                return left.scale(right.coefficient(()))
            raise self._error(TypeMismatchException, u"Use /\\ to multiply forms", node)
        if isinstance(left, GradedTensor):
            return left.scale(right)
        if isinstance(right, GradedTensor):
            return right.scale(left)
        return left * right

    def _eval_quotient(self, node):
        left, right = (self.evaluate(child) for child in node.children)
        if isinstance(right, GradedTensor):
            raise self._error(TypeMismatchException, u"Cannot divide by a form or multivector", node)
        if isinstance(left, GradedTensor):
            return left.scale(RationalFunction.one(self.ambient_dim) / right)
        return left / right

    def _eval_wedge(self, node):
        left, right = (self.evaluate(child) for child in node.children)
        if not isinstance(left, GradedTensor) or not isinstance(right, GradedTensor):
            raise self._error(TypeMismatchException, u"Wedge of non-forms", node)
        if type(left) is not type(right):
            raise self._error(TypeMismatchException, u"Cannot wedge a form with a multivector", node)
        return wedge(left, right)


def evaluate_text(text, ambient_dim):
    # type: (str, int) -> object
    return ExpressionEvaluator(ambient_dim, text).evaluate(parse_ast(text))


def _simplify_scalar(value):
    if value.is_polynomial():
        return value.as_polynomial()
    return value


def parse_scalar(text, ambient_dim):
    # type: (str, int) -> object
    """
    Parse a scalar expression.
    :return: a Polynomial when the value is polynomial, else a RationalFunction
    """
    value = evaluate_text(text, ambient_dim)
    if isinstance(value, DifferentialForm) and (value.is_zero() or value.degree == 0):
        value = value.coefficient(())
    if isinstance(value, GradedTensor):
        raise TypeMismatchException(u"Expected a scalar, got a degree {} value".format(value.degree))
    return _simplify_scalar(value)


def parse_form(text, ambient_dim):
    # type: (str, int) -> DifferentialForm
    value = evaluate_text(text, ambient_dim)
    if isinstance(value, MultiVector):
        raise TypeMismatchException(u"Expected a differential form, got a multivector")
    if not isinstance(value, DifferentialForm):
        value = DifferentialForm.scalar(value)
    return value


def parse_multivector(text, ambient_dim):
    # type: (str, int) -> MultiVector
    value = evaluate_text(text, ambient_dim)
    if isinstance(value, DifferentialForm):
        if not value.is_zero():
            raise TypeMismatchException(u"Expected a multivector, got a differential form")
        return MultiVector.zero(ambient_dim)
    if not isinstance(value, MultiVector):
        value = MultiVector.scalar(value)
    return value


def split_top_level(text, separator=u','):
    # type: (str, str) -> list
    """Split on separators that are not nested inside parentheses."""
    pieces = []
    depth = 0
    current = []
    for char in text:
        if char == u'(':
            depth += 1
        elif char == u')':
            depth -= 1
        if char == separator and depth == 0:
            pieces.append(u''.join(current))
            current = []
        else:
            current.append(char)
    pieces.append(u''.join(current))
    return pieces


def parse_flow(text, ambient_dim):
    # type: (str, int) -> PhaseFlow
    """
    Parse ``p1, p2, ..., pn`` (optionally wrapped in one pair of parentheses) into a PhaseFlow.
    """
    stripped = text.strip()
    pieces = split_top_level(stripped)
    if len(pieces) == 1 and stripped.startswith(u'(') and stripped.endswith(u')'):
        pieces = split_top_level(stripped[1:-1])
    if len(pieces) != ambient_dim:
        raise ExpressionSyntaxException(
            u"A flow in dimension {} needs {} components, got {}".format(ambient_dim, ambient_dim, len(pieces))
        )
    components = []
    for piece in pieces:
        value = parse_scalar(piece, ambient_dim)
        components.append(value if isinstance(value, Polynomial) else value.as_polynomial())
    return PhaseFlow(components)
