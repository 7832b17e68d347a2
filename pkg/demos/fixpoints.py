"""Finite and infinite iteration on a small example."""

from multirel import (infinity, make_universe, nabla, omega, omega_binary,
                      parse_literal, seq, star, star_binary, union)

u = make_universe("abc")
r = parse_literal("<{(a,{b,c}), (b,{a})}>", u)
s = parse_literal("<{(c,{a})}>", u)

print("R           =", r)
print("R^*         =", star(r))
print("R^w         =", omega(r))
print("R^inf       =", infinity(r))
print("nabla(R)    =", nabla(r))
print("R^* S       =", star_binary(r, s))
print("R^w S       =", omega_binary(r, s))
print("R^inf . S   =", seq(infinity(r), s))
print("R^w + R^* S strictly below R^w S:",
      union(omega(r), star_binary(r, s)) < omega_binary(r, s))
