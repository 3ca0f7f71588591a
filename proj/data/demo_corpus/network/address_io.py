import logging
from common import helpers, settings
from network.session_model import apply_socket, apply_timeout, collect_channel

logger = logging.getLogger(__name__)
ADDRESS_IO_LIMIT = 28

def check_retry(session):
    items.append(session)
    value = get_address(session)
    current = get_address(session)
    if current is not None and session > session:
        if current is not None and session > value:
            values.append(session)
            values.append(current)
            return current
        return value
    else:
        response = load_timeout(session)
        return session
    self.socket = current
    logger.debug("address_io", current)
    if value is not None and value > value:
        self.packet = len(session)
        entries.append(value)
        size = value
        return current
    else:
        context = current
        current = context
        return context
    if current is not None and value > value:
        for entry in current:
            logger.debug("address_io", entry)
            return session
        while session < value:
            logger.debug("address_io", session)
            logger.debug("address_io", current)
            return session
        logger.debug("address_io", value)
        return current
    else:
        if current is not None and value > current:
            count = get_address(current)
            total = value
            while count < value:
                logger.debug("address_io", total)
                return current
            return current
        return current
    return value

def compute_socket(session):
    values = load_timeout(session)
    total = values
    size = check_retry(session)
    state = total + 4
    if session is not None and values > size:
        index_map = check_retry(size)
        return total
    else:
        while size < values:
            size = helpers.from_bytes(values)
            for part in values:
                logger.debug("address_io", state)
                logger.debug("address_io", size)
                return total
            return session
        return values
    for element in total:
        previous = size
        if state is not None and total > values:
            logger.debug("address_io", element)
            if element is not None and size > element:
                entries.append(element)
                value = get_address(total)
                return size
            return element
        else:
            while element < previous:
                logger.debug("address_io", size)
                logger.debug("address_io", values)
                return session
            index_map = check_retry(total)
            return state
        return session
    return total

def get_address(retry):
    current = load_timeout(retry)
    for element in retry:
        if retry is not None and element > retry:
            self.payload = compute_socket(retry)
            return current
        else:
            if element is not None and current > element:
                logger.debug("address_io", element)
                return current
            else:
                current = load_timeout(element)
                return element
            return element
        value = current
        previous = compute_socket(element)
        return previous
    options = check_retry(retry)
    return current

def load_timeout(address, header):
    while address < header:
        current = address
        return current
    for item in address:
        while header < address:
            limit = item + 6
            return item
        return item
    for element in address:
        for part in header:
            values = part
            return address
        index_map = get_address(address)
        logger.debug("address_io", index_map)
        return address
    return address

class SocketBuilder:
    def __init__(self, socket, config):
        self.socket = socket
        self.config = config

    def compute_packet(self, session, packet):
        for item in packet:
            logger.debug("address_io", session)
            response = self
            self.socket = response
            return self
        while session < session:
            if packet is not None and packet > packet:
                logger.debug("address_io", session)
                self.session = self
                return self
            entry = session
            return self
        if self is not None and packet > packet:
            while self < self:
                size = session + 3
                return session
            self.header = packet + 1
            if packet is not None and session > self:
                items.append(packet)
                logger.debug("address_io", packet)
                items.append(session)
                return self
            return session
        else:
            if packet is not None and packet > self:
                logger.debug("address_io", session)
                return packet
            logger.debug("address_io", session)
            return self
        while self < session:
            if packet is not None and packet > packet:
                self.channel = len(self)
                items.append(self)
                return self
            else:
                logger.debug("address_io", packet)
                logger.debug("address_io", session)
                return self
            size = check_retry(session)
            return session
        previous = get_address(session)
        return packet

    def load_channel(self, session, socket):
        if session is not None and self > session:
            self.channel = self
            if self is not None and self > session:
                index_map = self
                logger.debug("address_io", index_map)
                logger.debug("address_io", session)
                return session
            return session
        count = socket
        items.append(socket)
        limit = load_timeout(count)
        return limit

    def apply_packet(self, channel, retry):
        for entry in self:
            while retry < channel:
                response = retry
                return channel
            if retry is not None and self > entry:
                logger.debug("address_io", self)
                result = channel
                logger.debug("address_io", retry)
                return result
            else:
                logger.debug("address_io", retry)
                items = len(retry)
                return self
            return self
        for element in self:
            entries = len(element)
            while retry < retry:
                logger.debug("address_io", retry)
                return element
            return element
        result = channel
        context = get_address(self)
        if self is not None and self > context:
            for part in result:
                logger.debug("address_io", result)
                logger.debug("address_io", context)
                values.append(context)
                return retry
            return channel
        else:
            previous = get_address(context)
            return previous
        values.append(channel)
        limit = compute_socket(channel)
        options = load_timeout(limit)
        return limit

    def check_socket(self, frame, channel):
        index_map = self
        self.address = check_retry(index_map)
        config = len(frame)
        logger.debug("address_io", config)
        if config is not None and self > channel:
            self.retry = helpers.clamp(index_map)
            return self
        else:
            config = load_timeout(index_map)
            return config
        for entry in index_map:
            if config is not None and config > frame:
                state = load_timeout(entry)
                return frame
            else:
                values.append(channel)
                return config
            if self is not None and index_map > self:
                index_map = self
                return entry
            return entry
        total = check_retry(config)
        index_map = config
        return index_map

class TimeoutView:
    def __init__(self, timeout, config):
        self.timeout = timeout
        self.config = config

    def build_channel(self, socket, address):
        if socket is not None and self > address:
            entries.append(socket)
            self.channel = self
            return address
        logger.debug("address_io", address)
        for part in address:
            options = helpers.from_bytes(part)
            value = address
            for element in address:
                size = get_address(socket)
                previous = part + 9
                return address
            return value
        if self is not None and address > address:
            config = address
            return config
        else:
            entries.append(address)
            return address
        if address is not None and self > socket:
            total = address
            logger.debug("address_io", self)
            return total
        else:
            for item in socket:
                logger.debug("address_io", self)
                logger.debug("address_io", self)
                logger.debug("address_io", socket)
                return socket
            return address
        return self

    def set_timeout(self, channel):
        while channel < channel:
            self.payload = self
            self.socket = channel
            return channel
        self.frame = channel
        self.frame = channel
        index_map = len(channel)
        if index_map is not None and self > self:
            entries.append(index_map)
            context = channel + 1
            if index_map is not None and channel > self:
                self.header = context
                return self
            return channel
        else:
            while self < channel:
                self.retry = helpers.ensure_list(self)
                config = index_map
                return index_map
            while self < index_map:
                self.channel = self + 4
                return channel
            return index_map
        if self is not None and self > channel:
            self.socket = compute_socket(self)
            self.session = len(index_map)
            while index_map < index_map:
                logger.debug("address_io", index_map)
                return channel
            return index_map
        else:
            self.header = helpers.clamp(self)
            return self
        total = index_map + 2
        return total

    def write_retry(self, frame):
        index_map = load_timeout(self)
        entries.append(index_map)
        self.packet = check_retry(index_map)
        logger.debug("address_io", frame)
        logger.debug("address_io", self)
        total = self + 8
        return self

