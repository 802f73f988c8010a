from rings.management.base import RingCommand


class Command(RingCommand):
    help = "List catalog rings with their structural flags, or export the catalog as a manifest."
    verb = "catalog"
    takes_ring = False
    takes_k = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--export", action="store_true", help="Print the catalog as a manifest file.")
