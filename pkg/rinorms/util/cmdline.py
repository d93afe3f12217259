#!/usr/bin/env python
# -*- coding: utf-8 -*-


import ast
import builtins

# builtin function whitelist
_BUILTIN_WHITELIST = frozenset(['range', 'list', 'dict', 'tuple'])
_missing = _BUILTIN_WHITELIST.difference(dir(builtins))
if len(_missing) > 0:
    raise ValueError("'%s' are not valid builtin functions.'" % list(_missing))


def _eval_value(node, source):
    # Calls to whitelisted builtins are evaluated,
    # with arguments passed recursively through this function
    if isinstance(node, ast.Call):
        if not isinstance(node.func, ast.Name):
            raise ValueError("Only calls to builtins are supported "
                             "in '%s'" % source)

        func_name = node.func.id

        if func_name not in _BUILTIN_WHITELIST:
            raise ValueError("Function '%s' in '%s' is not builtin. "
                             "Available builtins: '%s'" %
                             (func_name, source,
                              sorted(_BUILTIN_WHITELIST)))

        args = tuple(_eval_value(a, source) for a in node.args)
        kwargs = {kw.arg: _eval_value(kw.value, source)
                  for kw in node.keywords}

        return getattr(builtins, func_name)(*args, **kwargs)
    # Containers may hold builtin calls, recurse into them
    elif isinstance(node, ast.List):
        return [_eval_value(e, source) for e in node.elts]
    elif isinstance(node, ast.Tuple):
        return tuple(_eval_value(e, source) for e in node.elts)
    elif isinstance(node, ast.Dict):
        return {_eval_value(k, source): _eval_value(v, source)
                for k, v in zip(node.keys, node.values)}
    else:
        return ast.literal_eval(node)


def parse_python_assigns(assign_str):
    """
    Parses a string, containing assign statements
    into a dictionary. Statements may be separated by
    semi-colons or newlines, and comments are allowed,
    so that the same function parses both ``--set``
    overrides and experiment configuration files.

    .. code-block:: python

        data = parse_python_assigns("seed=5; n=list(range(1, 3))\\n"
                                    "M = {'ri': 'lp', 'p': 1}")

        assert data == {
            'seed': 5,
            'n': [1, 2],
            'M': {'ri': 'lp', 'p': 1},
        }

    Parameters
    ----------
    assign_str: str
        Assignment string. Should only contain assignment statements
        assigning python literals or whitelisted builtin function calls
        to variable names.

    Returns
    -------
    dict
        Dictionary { name: value } containing
        assignment results.
    """

    if not assign_str:
        return {}

    variables = {}

    try:
        stmts = ast.parse(assign_str, mode='exec').body
    except SyntaxError as e:
        raise ValueError("Unable to parse '%s': %s" % (assign_str, e))

    for i, stmt in enumerate(stmts):
        if not isinstance(stmt, ast.Assign):
            raise ValueError("Statement %d in '%s' is not a "
                             "variable assignment." % (i, assign_str))

        value = _eval_value(stmt.value, assign_str)

        # "a = b = c" => targets 'a' and 'b' with 'c' as result
        for target in stmt.targets:
            if isinstance(target, ast.Name):
                variables[target.id] = value

            # (a, b) = (1, 2)
            elif isinstance(target, (ast.Tuple, ast.List)):
                if not all(isinstance(e, ast.Name) for e in target.elts):
                    raise ValueError("Tuple unpacking in assignment %d "
                                     "in expression '%s' failed as not all "
                                     "tuple contents are variable names."
                                     % (i, assign_str))

                if not isinstance(value, (tuple, list)):
                    elements = (value,)
                else:
                    elements = value

                if not len(target.elts) == len(elements):
                    raise ValueError("Unpacking '%s' into a tuple/list in "
                                     "assignment %d of expression '%s' "
                                     "failed. The number of tuple elements "
                                     "did not match the number of values."
                                     % (value, i, assign_str))

                for variable, element in zip(target.elts, elements):
                    variables[variable.id] = element
            else:
                raise TypeError("'%s' types are not supported "
                                "as assignment targets." % type(target))

    return variables


def load_python_assigns(filename):
    """ Parse the assignments in ``filename`` """
    with open(filename, "r") as f:
        return parse_python_assigns(f.read())
