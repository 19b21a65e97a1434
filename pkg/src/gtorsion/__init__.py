"""Generalized torsion of order two in 3-manifold groups."""

from .backends import (Backend, ExtensionBackend, KleinBackend, RewritingBackend, SubstitutionBackend,
                       UndecidableError, verify_pair)
from .extension import ExtensionElement, ExtensionGroup, OrbifoldGroup, ext_group_from_seifert
from .homology import (AbelianDecomposition, abelianization, homology_class_is_zero, order2_necessary,
                       smith_normal_form)
from .klein import KleinElement, KleinPair, k_enumerate_gt_pairs, k_is_gt_pair, k_is_primitive_pair
from .manifest import load_manifest, parse_manifest
from .manifold import (HyperbolicPiece, Irreducible, ManifoldDescriptor, S2xS1, SeifertPiece, SolidTorus,
                       Spherical, admits_gt_order2, finite_admits_order2, is_r_group, is_rbar_group)
from .oracle import SearchBounds, SearchResult, cross_validate, search_gt_order2
from .rewriting import RewriteSystem, knuth_bendix
from .seifert import (CaseTag, GTWitness, Status, Verdict, check_horizontal_cover, gt_order2_status,
                      horizontal_base_solutions)
from .sfs import SeifertData, SeifertInvariant, seifert_presentation
from .words import InputError, Presentation, Word, parse_presentation, parse_word

__version__ = "0.1.0"
