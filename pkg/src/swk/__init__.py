"""Exact computations around spherical Whittaker functions for GL(n):

* `rings`: symbolic and prime-field coefficient rings, sparse Laurent
  polynomial arithmetic;
* `symfun`: partitions, elementary and Schur polynomials (bialternant
  and dual Jacobi-Trudi);
* `whittaker`: spherical Whittaker value tables, closed formula vs
  defining recursion, spherical operators, blockwise variants;
* `affine`, `hecke`: the extended affine Hecke algebra in the coset
  and translation presentations, with base change, center detection,
  spherical images, and block embeddings;
* `module`: the n!-dimensional splitting-algebra model of the
  unramified module, its generator matrices, banality classification,
  and the cyclic-span criterion;
* `cli`: deterministic JSON batch frontend (`swk ...`).
"""

from .affine import ExtAffPerm
from .errors import (BoundExhausted, CapabilityError, DimensionError,
                     InconsistentSystemError, OracleMismatch, RingError,
                     SchemaError, SwkError)
from .hecke import (HeckeElemB, HeckeElemIM, bern_basis, bern_one,
                    bern_simple, bern_to_im, bern_x, im_basis,
                    im_invert_translation, im_one, im_shift, im_simple,
                    im_to_bern, is_central, levi_embed, levi_embed_factor,
                    satake_spherical, trivial_char, x_monomial)
from .module import (BanalClass, IharaVerdict, UnramifiedModule, a_span_dim,
                     artin_basis, banal_class, build_module, gl_order,
                     ihara_criterion, normal_form, satake_module_action,
                     splitting_basis)
from .rings import CoeffRing, LaurentPoly, RingElem, is_symmetric, make_ring
from .symfun import (Weight, conjugate, dominant_weights_in_box, elementary,
                     eval_in_elementary, is_dominant, schur_bialternant,
                     schur_jacobi_trudi, weight_size)
from .whittaker import (HeckeChar, WhittakerTable, ev1, hecke_apply,
                        recursion_solve, whittaker_levi, whittaker_value)

__version__ = "0.1.0"
