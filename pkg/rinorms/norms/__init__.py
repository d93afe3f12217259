# flake8: noqa

from rinorms.norms.specs import (RiNormSpec,
                                 SeqNormSpec,
                                 Lp,
                                 Lorentz,
                                 Orlicz,
                                 LpSeq,
                                 Linf,
                                 TopM,
                                 OrliczSeq,
                                 as_orlicz,
                                 ri_from_literal,
                                 seq_from_literal,
                                 from_literal,
                                 to_literal)
from rinorms.norms.luxemburg import (luxemburg_gauge,
                                     sequence_luxemburg,
                                     function_luxemburg)
from rinorms.norms.ri import (ri_eval,
                              lp_norm,
                              lorentz_norm,
                              theta_luxemburg)
from rinorms.norms.seq import seq_eval, seq_eval_rows, abel_expand
from rinorms.norms.pfunctional import (PFunctional,
                                       p_eval,
                                       p_prime_eval,
                                       dilate_domain)
