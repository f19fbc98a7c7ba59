from lamkernel.models.term import Abs, App, Const, Term, VarRef
from lamkernel.utils.substitution import fresh_not_in, subst1
from lamkernel.utils.syntax import free_vars


def alpha_eq(left: Term, right: Term) -> bool:
    """Decide alpha-conversion by renaming both binders to a common fresh name."""
    if isinstance(left, Const) and isinstance(right, Const):
        return left.symbol == right.symbol
    if isinstance(left, VarRef) and isinstance(right, VarRef):
        return left.var == right.var
    if isinstance(left, App) and isinstance(right, App):
        return alpha_eq(left.fun, right.fun) and alpha_eq(left.arg, right.arg)
    if isinstance(left, Abs) and isinstance(right, Abs):
        y = fresh_not_in(free_vars(left) + free_vars(right))
        return alpha_eq(subst1(left.body, VarRef(y), left.var),
                        subst1(right.body, VarRef(y), right.var))
    return False
