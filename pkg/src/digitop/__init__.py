"""Exact homotopy computations for digital images on the integer lattice.

Images are finite subsets of Z^n with Chebyshev adjacency; maps are
assignment tables; homotopy is connectivity in finite function spaces
and is decided by search, with Yes/No/Unknown verdicts carrying
revalidating witnesses or the bounds that ran out.
"""

from .errors import (DigitopError, DimensionMismatch, EnumerationOverflow,
                     InternalVerificationError, NotAMember, NotContinuous,
                     PreconditionError, SearchBudgetExceeded,
                     SignatureMismatch)
from .image import (DigitalImage, adjacent, cube, interval, is_connected,
                    point_image, product, window)
from .maps import (DigitalMap, compose, constant_map, diagonal,
                   find_isomorphism, inclusion_map, is_continuous,
                   product_map, projections)
from .subdivision import (Subdivision, fiber, iso_iterated,
                          iso_product_subdivision, subdivide,
                          subdivide_inclusion)
from .funcspace import (BasedPathSpace, MapFamily, MapSpace, based_paths,
                        constant_path, curry, endpoints, enumerate_maps, ev,
                        maps_adjacent, path_from_points, prolong_path,
                        pullback, pushforward, uncurry)
from .homotopy import (Homotopy, concat, ev0_homotopy_equivalence_witness,
                       homotopic, homotopy_equivalent, is_contractible,
                       is_subdivision_contractible, neighbors_in_mapspace,
                       prolong, verify_homotopy)
from .cofib import (FillerWitness, RetractionWitness, borsuk_filler,
                    based_path_fibration_lift, endpoints_fibration_lift,
                    exhaustive_filler_search, hep_filler,
                    path_fibration_lift, product_with_cofibration,
                    pushout_filler, pushout_filler_verdict,
                    retraction_both_endpoints, retraction_origin_interval,
                    verify_retraction)
from .circle import (DiamondLoop, LiftCertificate, WindingObstruction,
                     circle8, cover_point, diamond, lift_homotopy,
                     lift_path, sphere, winding_index, winding_number,
                     winding_obstruction)
from .lscat import (CategoricalCover, dcat, diamond_lower_bound,
                    is_categorical, is_subdivision_categorical,
                    section_check)
from .verdict import Verdict

__version__ = "0.1.0"
