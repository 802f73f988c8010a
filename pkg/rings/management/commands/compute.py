from rings.management.base import RingCommand


class Command(RingCommand):
    help = "Print the exact zp_k of a ring expression as p/q with a decimal approximation."
    verb = "compute"
