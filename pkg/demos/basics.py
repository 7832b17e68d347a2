"""Compose a few multirelations over a three-state universe and print them."""

from multirel import (domain, make_universe, nu, par, parse_literal, seq, tau,
                      up_closure)

u = make_universe("abc")
r = parse_literal("<{(a,{b,c}), (b,{a}), (c,{})}>", u)
s = parse_literal("<{(a,{a}), (b,{c}), (c,{a,b})}>", u)

print("R       =", r)
print("S       =", s)
print("R . S   =", seq(r, s))
print("R || S  =", par(r, s))
print("d(R)    =", domain(r))
print("tau(R)  =", tau(r))
print("nu(R)   =", nu(r))
print("up(S)   =", up_closure(s))
