"""Módulo de traducciones para los mensajes de la biblioteca y la CLI.

Este módulo contiene todas las cadenas de texto (logs, errores y ayuda de
la línea de órdenes) en catalán.
"""

# Aplicación
APP_FINISHED = "Execució finalitzada amb codi {code}"
APP_INTERRUPTED = "Execució interrompuda per l'usuari"
APP_ERROR_RUN = "Error inesperat durant l'execució: {error}"
APP_ERROR_DETAILS = "Detalls: {error}"
APP_ERROR_CHECK_LOGS = "Consulta els logs per a més informació."

# Configuració
CONFIG_ERROR_FILE_NOT_FOUND = "No s'ha trobat el fitxer de configuració: {path}"
CONFIG_ERROR_UNSUPPORTED_FORMAT = "Format de configuració no suportat: {suffix}. Fes servir .json"
CONFIG_ERROR_NOT_OBJECT = "El fitxer de configuració {path} ha de contenir un objecte JSON"
CONFIG_ERROR_POSITIVE = "{name} ha de ser positiu, s'ha rebut {value}"
CONFIG_ERROR_ALPHA_RANGE = "alpha ha d'estar a l'interval obert (0, 2), s'ha rebut {value}"
CONFIG_ERROR_REL_TOL_RANGE = "rel_tol ha d'estar a l'interval obert (0, 0.5), s'ha rebut {value}"
CONFIG_ERROR_COUNT = "{name} ha de ser un enter ≥ 1, s'ha rebut {value}"

# Àlgebra lineal i rotacions
LINALG_ERROR_SHAPE = "S'esperava una matriu 3×3, s'ha rebut la forma {shape}"
LINALG_ERROR_NOT_FINITE = "La matriu conté entrades no finites"
ROTATION_ERROR_INVALID = "La matriu no és una rotació (desviació {deviation:.3e})"
ROTATION_ERROR_NOT_UNIT = "El quaternió no és unitari (norma {norm})"

# Instantó
INSTANTON_ERROR_POINT = "Punt de R⁴ no vàlid: {point}"
INSTANTON_ERROR_L = "L ha de ser positiu i finit, s'ha rebut {L}"
INSTANTON_ERROR_SCALE = "L'escala λ ha de ser positiva i finita, s'ha rebut {scale}"
INSTANTON_ERROR_AT_CENTER = "Singularitat del gauge radial exterior: |x − y| = {dist:.3e}"
INSTANTON_ERROR_AT_POINT = "L'angle d'enganxament no està definit a p ni a q: y = {point}"

# Lema de rang u
LEMMA_ERROR_NOT_SORTED = "Els valors singulars han d'estar estrictament ordenats: {sigma}"
LEMMA_ERROR_NOT_GENERIC = "L'oracle necessita una matriu genèrica (estrat {tag})"
LEMMA_ERROR_ORACLE_INCONCLUSIVE = "Oracle inconcloent: {found} mínims distints amb {starts} arrencades"
LEMMA_WARNING_UNCERTIFIED = (
    "Sortida del lema sense certificar: residu {residual:.3e}, σ₁ {top:.3e} (estrat {tag})"
)
LEMMA_DEBUG_DEGENERATE = "Lema degenerat per a l'estrat {tag}"
ORACLE_DEBUG_START = "Oracle, arrencada {index}: residu {residual:.3e}"

# Camps de fons
BACKGROUND_ERROR_COEFFICIENTS = "Coeficients '{name}' no vàlids (forma {shape})"
BACKGROUND_ERROR_FORMAT_TAG = "El document no és un camp de fons d'instanton-gluing"
BACKGROUND_ERROR_VERSION = "Versió de camp de fons no suportada: {version}"
BACKGROUND_ERROR_FIELDS = "Camp de fons mal format: {error}"
BACKGROUND_ERROR_AMPLITUDE = "L'amplitud ha de ser positiva, s'ha rebut {amplitude}"
BACKGROUND_ERROR_DEGREE = "El grau ha d'estar entre 0 i 2, s'ha rebut {degree}"
BACKGROUND_ERROR_GENERICITY = (
    "No s'ha obtingut cap camp genèric per a la llavor {seed} després de {retries} intents"
)
BACKGROUND_ERROR_DEGENERATE_TARGET = "El lema no dona dues solucions al punt {point} ({kind})"
BACKGROUND_LOG_RESAMPLED = "Camp de la llavor {seed} genèric després de {attempts} intents"
BACKGROUND_DEBUG_NOT_GENERIC = "Llavor {seed}, intent {attempt}: camp no genèric, es torna a sortejar"
BACKGROUND_WARNING_AMBIGUOUS_LABELS = (
    "Aparellament d'etiquetes p↔q ambigu a L={L}: {matched:.3e} contra {swapped:.3e}"
)

# Magnitud
MAGNITUDE_ERROR_SIZES = "s_p i s_q han de ser positius, s'ha rebut s_p={s_p}, s_q={s_q}"

# Resolutor
SOLVER_DEBUG_START = "Aparellament {pairing}, arrencada {index}: convergència={ok}"
SOLVER_DEBUG_INADMISSIBLE = "Aparellament {pairing}: arrel descartada, λ={lam:.3e} no admissible"
SOLVER_WARNING_UNCERTIFIED = "Aparellament {pairing}: arrel sense certificar (defecte {defect:.3e})"
SOLVER_WARNING_NOT_TRANSVERSE = "Aparellament {pairing}: solució no transversal ({error})"
SOLVER_LOG_SUMMARY = "L={L}: {total} solucions certificades {counts}"
SOLVER_WARNING_COUNT_ANOMALY = "Anomalia de recompte a L={L}: {anomalies}"
ORIENTATION_ERROR_SINGULAR = "Jacobià d'orientació singular"
ORIENTATION_ERROR_NEAR_DEGENERATE = "Jacobià d'orientació gairebé degenerat (ràtio {ratio:.3e})"
ORIENTATION_DEBUG_REFERENCE = "Signe brut de la configuració de referència: {sign}"
ORACLE_LOG_SUMMARY = (
    "Oracle global: {starts} arrencades, {converged} convergides, "
    "{found} solucions, {rejected} rebutjades"
)
ORACLE_WARNING_DISAGREEMENT = (
    "Desacord amb l'oracle: {structured} solucions només estructurades, {oracle} només de l'oracle"
)

# Estabilitat del recompte
STABILITY_ERROR_SWEEP = "Escombrat diàdic no vàlid: L={L}, profunditat {depth}"
STABILITY_WARNING_DEGENERATE = "Llavor {seed}, L={L}: objectius degenerats a l'escombrat ({error})"
STABILITY_LOG_THRESHOLD = "Llavor {seed}, alpha={alpha}: recompte estable per a L ≤ {threshold}"
STABILITY_WARNING_NO_THRESHOLD = (
    "Llavor {seed}, alpha={alpha}: el recompte no és estable ni tan sols a L={L}"
)

# Persistència
STORE_LOG_WRITING_TEMP = "Escrivint el fitxer temporal: {path}"
STORE_LOG_SAVED = "Fitxer desat: {path}"
STORE_ERROR_NOT_FOUND = "No s'ha trobat el fitxer: {path}"
STORE_ERROR_FORMAT = "El fitxer {path} no és un conjunt de solucions d'instanton-gluing"

# Experiments
EXPERIMENT_ERROR_NO_SEEDS = "Cal almenys una llavor"
EXPERIMENT_ERROR_L_VALUES = "Els valors de L han de ser positius i no buits: {values}"
EXPERIMENT_ERROR_L_ORDER = "Els valors de L han d'estar estrictament en ordre descendent: {values}"
EXPERIMENT_ERROR_NO_ALPHAS = "Cal almenys un valor d'alpha"
EXPERIMENT_ERROR_STARTS = "El nombre d'arrencades ha de ser ≥ 1, s'ha rebut {starts}"
EXPERIMENT_ERROR_DEPTH = "La profunditat de l'escombrat ha de ser ≥ 0, s'ha rebut {depth}"
RUNNER_LOG_START = "Experiment: {seeds} llavors, L={L}, alpha={alphas}, sortida {out}"
RUNNER_LOG_CELL = "Llavor {seed}, L={L}, alpha={alpha}: recompte {count}, signes {signs}, oracle {oracle}"
RUNNER_LOG_DONE = "Experiment acabat: {rows} files, codi de sortida {code}"
RUNNER_WARNING_DEGENERATE = "Llavor {seed}, L={L}: objectius degenerats ({error})"
RUNNER_WARNING_ANOMALIES = "{count} anomalies registrades a {path}"
RUNNER_LOG_STABILITY = "Llindars d'estabilitat desats a {path}"
PLOT_LOG_SAVED = "Figura desada: {path}"

# Bateria del lema
LEMMA_SUITE_ERROR_N = "n ha de ser ≥ 1, s'ha rebut {n}"
LEMMA_SUITE_PASS = "OK"
LEMMA_SUITE_FAIL = "ERROR"
LEMMA_SUITE_LINE = "[{status}] {name} {detail}"
LEMMA_SUITE_WARNING_INCONCLUSIVE = "Matriu {index}: {error}"
LEMMA_SUITE_WARNING_MISMATCH = "Matriu {index}: la forma tancada no coincideix amb l'oracle ({found} mínims)"

# Línia d'ordres
CLI_DESCRIPTION = "Recompte de dades d'enganxament d'instantons i comprovacions del lema de rang u"
CLI_HELP_LOG_LEVEL = "Nivell de log (DEBUG, INFO, WARNING, ERROR)"
CLI_HELP_RUN = "Executa l'escombrat de llavors × L × alpha"
CLI_HELP_LEMMA = "Executa la bateria de comprovacions del lema"
CLI_HELP_SEEDS = "Llavors: rang '0-19' o llista '1,5,7'"
CLI_HELP_L = "Valors de L en ordre descendent"
CLI_HELP_ALPHA = "Exponents alpha de la cota λ ≤ K·L^alpha"
CLI_HELP_K = "Constant K de la cota d'admissibilitat"
CLI_HELP_DEGREE = "Grau dels camps de fons (0, 1 o 2)"
CLI_HELP_AMPLITUDE = "Amplitud dels coeficients dels camps de fons"
CLI_HELP_ORACLE = "Contrasta cada cel·la amb l'oracle global"
CLI_HELP_STARTS = "Nombre d'arrencades de l'oracle"
CLI_HELP_OUT = "Carpeta de sortida (per defecte $INSTANTON_GLUING_OUT o ./results)"
CLI_HELP_PLOTS = "Genera les figures SVG"
CLI_HELP_TOL = "Tolerància relativa de certificació σ₂/σ₁"
CLI_HELP_NO_TIMING = "Escriu wall_ms=0 perquè el CSV sigui reproduïble byte a byte"
CLI_HELP_WORKERS = "Processos per paral·lelitzar aparellaments i arrencades"
CLI_HELP_CONFIG = "Fitxer JSON de configuració"
CLI_HELP_SWEEP_DEPTH = "Meitats diàdiques addicionals per sota de la L mínima per fixar el llindar d'estabilitat"
CLI_HELP_N = "Nombre de matrius aleatòries"
CLI_HELP_SEED = "Llavor"
CLI_ERROR_SEEDS = "Llavors no vàlides: '{text}'"
CLI_DEBUG_ARGS = "Arguments: {args}"
CLI_RUN_SUMMARY = "{rows} files escrites a {csv} (codi de sortida {code})"
