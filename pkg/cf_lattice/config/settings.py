"""
Settings Centralizados
Variables de configuración y límites de escala de escritorio
"""

import logging
from pydantic_settings import BaseSettings

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Configuración global de cf_lattice (sobrescribible con CFL_*)"""

    # ========== VALORES POR DEFECTO DE LA CLI ==========
    DEFAULT_FIELD: str = "Q"
    DEFAULT_SEED: int = 42
    DEFAULT_TRIALS: int = 1000
    DEFAULT_WINDOW: int = 8

    # ========== CERTIFICACIÓN ==========
    PROBE_MARGIN: int = 4  # columnas extra sondeadas tras la ventana certificada
    CENTER_SCAN_LIMIT: int = 64  # columnas escaneadas en palabras sin cola decidible

    # ========== BÚSQUEDA DE TRANSVECCIONES ==========
    SEARCH_DEPTH: int = 6
    SEARCH_MAX_STATES: int = 50_000
    ATTACH_WITNESS: bool = True
    TRANSVECTION_TARGET_RATE: float = 0.95

    # ========== LÍMITES DE ESCALA ==========
    MAX_AMBIENT_ORDER: int = 20_000  # |GL(n, F_p)| máximo para fuerza bruta
    DLOG_MAX_PRIME: int = 2**20  # logaritmo discreto por tabla exhaustiva
    PRIME_MODULUS_BOUND: int = 2**31
    FACTOR_BOUND: int = 10**12  # |numerador|, denominador por división de prueba
    UNIT_ORACLE_BOUND: int = 5  # caja de exponentes del oráculo de K*

    # ========== EJECUCIÓN ==========
    SUITE_WORKERS: int = 1
    LOG_LEVEL: str = "INFO"

    class Config:
        env_file = ".env"
        env_prefix = "CFL_"
        case_sensitive = True


# ========== INSTANCIA GLOBAL ==========

settings = Settings()


# ========== VALIDACIÓN ==========

def validate_settings() -> list:
    """
    Revisa la coherencia de los límites configurados.

    Returns:
        list: Mensajes de advertencia (vacía si todo está bien)
    """
    errors = []

    for name in ("DEFAULT_TRIALS", "DEFAULT_WINDOW", "SEARCH_DEPTH", "SEARCH_MAX_STATES",
                 "MAX_AMBIENT_ORDER", "SUITE_WORKERS", "CENTER_SCAN_LIMIT"):
        if getattr(settings, name) <= 0:
            errors.append(f"❌ {name} debe ser positivo")

    if settings.PROBE_MARGIN < 0:
        errors.append("❌ PROBE_MARGIN no puede ser negativo")

    if not 0.0 <= settings.TRANSVECTION_TARGET_RATE <= 1.0:
        errors.append("❌ TRANSVECTION_TARGET_RATE fuera de [0, 1]")

    if settings.DLOG_MAX_PRIME > settings.PRIME_MODULUS_BOUND:
        errors.append("⚠️ DLOG_MAX_PRIME supera PRIME_MODULUS_BOUND")

    if errors:
        logger.warning("⚠️ ADVERTENCIAS DE CONFIGURACIÓN:")
        for error in errors:
            logger.warning(f"  {error}")
    else:
        logger.debug("✅ Configuración validada correctamente")

    return errors
