from rings.management.base import RingCommand


class Command(RingCommand):
    help = "Recompute the published zp_k values and compare them exactly."
    verb = "table"
    takes_ring = False
    takes_k = False
    recordable = True
