####### Limites do motor simbólico
#
# Cada valor pode ser sobrescrito por uma variável de ambiente TGWA_<NOME>,
# inclusive a partir de um arquivo .env na pasta de trabalho.

import os

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(f"TGWA_{name}")
    if raw is None or not raw.strip():
        return default
    return int(raw)


# Soma máxima de |g_i| na enumeração de monômios reduzidos (teste de zero)
DEG_CAP = _env_int("DEG_CAP", 12)
# Grau máximo |g|_1 na busca limitada de elementos centrais
CENTER_DEG_CAP = _env_int("CENTER_DEG_CAP", 4)
# Grau total máximo dos coeficientes em R na busca de elementos centrais
CENTER_COEFF_CAP = _env_int("CENTER_COEFF_CAP", 2)
# Maior d testado diretamente na condição Rt_i + R sigma_i^d(t_i) = R
ORE_D_BOUND = _env_int("ORE_D_BOUND", 25)
# Maior |m|, |l| nos colchetes [A_{m k_i}, A_{l k_j}] do centralizador
CENTRALIZER_M_CAP = _env_int("CENTRALIZER_M_CAP", 3)
# Raio da caixa [-r, r]^n na busca do núcleo para famílias genéricas
KERNEL_BOX_RADIUS = _env_int("KERNEL_BOX_RADIUS", 3)
# Comprimento máximo de órbita na busca finitística (sigma não afim)
FINITISTIC_BOUND = _env_int("FINITISTIC_BOUND", 12)
# Grau máximo por índice no certificado de pares de Weyl
WEYL_MAX_DEGREE = _env_int("WEYL_MAX_DEGREE", 3)
