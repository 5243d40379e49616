"""Opcode numbering for the postfix expression tape.

The compiled kernel mirrors these values in a C enum; a unit test keeps
the two in sync.  ``OP_CONST`` reads its operand from the parallel
value array, every other opcode ignores it.
"""

OP_CONST = 0
OP_VAR = 1
OP_ADD = 2
OP_SUB = 3
OP_MUL = 4
OP_DIV = 5
OP_POW = 6
OP_NEG = 7
OP_ABS = 8
OP_EXP = 9
OP_LN = 10
OP_SIN = 11
OP_COS = 12
OP_SQRT = 13
OP_MIN = 14
OP_MAX = 15

OP_NAMES = {
    OP_CONST: "const",
    OP_VAR: "t",
    OP_ADD: "+",
    OP_SUB: "-",
    OP_MUL: "*",
    OP_DIV: "/",
    OP_POW: "^",
    OP_NEG: "neg",
    OP_ABS: "abs",
    OP_EXP: "exp",
    OP_LN: "ln",
    OP_SIN: "sin",
    OP_COS: "cos",
    OP_SQRT: "sqrt",
    OP_MIN: "min",
    OP_MAX: "max",
}

# evaluation status codes shared by both kernels
EVAL_OK = 0
EVAL_DIV_ZERO = 1
EVAL_LOG_DOMAIN = 2
EVAL_SQRT_DOMAIN = 3
EVAL_POW_DOMAIN = 4
EVAL_NONFINITE = 5

EVAL_MESSAGES = {
    EVAL_DIV_ZERO: "division by zero",
    EVAL_LOG_DOMAIN: "ln of a non-positive number",
    EVAL_SQRT_DOMAIN: "sqrt of a negative number",
    EVAL_POW_DOMAIN: "power with undefined real value",
    EVAL_NONFINITE: "non-finite result (overflow)",
}

# integrate_tape status codes
QUAD_OK = 0
QUAD_EVAL_ERROR = 1
QUAD_DEPTH_EXCEEDED = 2

#: Hard cap on evaluation stack depth; the tape compiler rejects
#: expressions needing more.
MAX_STACK = 128
