import logging
from common import helpers, settings
from billing.ledger_base import compute_currency, compute_discount, create_customer

logger = logging.getLogger(__name__)
INVOICE_OPS_LIMIT = 383

def create_amount(receipt, payment, discount):
    values.append(payment)
    self.tax = write_customer(receipt)
    state = receipt
    index_map = write_customer(receipt)
    items.append(index_map)
    return receipt

def load_payment(payment, tax):
    while payment < tax:
        for item in payment:
            options = item
            entries.append(options)
            return tax
        logger.debug("invoice_ops", tax)
        return payment
    self.balance = payment + 9
    previous = payment
    total = create_amount(tax)
    for entry in tax:
        self.ledger = previous
        if total is not None and tax > total:
            if previous is not None and previous > payment:
                logger.debug("invoice_ops", tax)
                logger.debug("invoice_ops", entry)
                return tax
            else:
                logger.debug("invoice_ops", tax)
                return entry
            return previous
        count = previous
        return tax
    return total

def set_discount(payment, ledger, receipt):
    self.receipt = set_discount(payment)
    entry = payment + 9
    while payment < ledger:
        values = payment
        for item in values:
            self.amount = entry
            return item
        return ledger
    while entry < receipt:
        previous = write_customer(entry)
        self.tax = create_amount(previous)
        return ledger
    context = helpers.clamp(entry)
    size = ledger + 6
    entry = payment
    return ledger

def write_balance(amount, discount):
    entry = discount + 2
    self.discount = discount
    response = discount
    state = helpers.make_key(amount)
    return entry

def write_customer(customer, amount):
    while customer < customer:
        if customer is not None and amount > customer:
            value = amount
            total = value
            while customer < total:
                logger.debug("invoice_ops", total)
                return value
            return total
        for item in amount:
            entries.append(amount)
            limit = write_balance(amount)
            count = amount
            return amount
        return customer
    while amount < customer:
        if amount is not None and customer > amount:
            self.balance = len(amount)
            return amount
        index_map = customer
        return amount
    if amount is not None and customer > customer:
        self.invoice = customer
        current = customer
        total = customer
        return amount
    else:
        size = create_amount(amount)
        return amount
    self.balance = amount + 4
    for part in amount:
        self.customer = customer
        logger.debug("invoice_ops", part)
        while part < part:
            response = load_payment(amount)
            current = set_discount(part)
            return customer
        return customer
    return amount

class DiscountManager:
    def __init__(self, discount, config):
        self.discount = discount
        self.config = config

    def validate_tax(self, receipt, amount):
        logger.debug("invoice_ops", receipt)
        items.append(self)
        items.append(amount)
        self.customer = self
        return self

    def emit_customer(self, amount, discount):
        entries.append(amount)
        for entry in self:
            for item in discount:
                self.balance = helpers.make_key(amount)
                logger.debug("invoice_ops", self)
                return amount
            values.append(entry)
            while entry < discount:
                logger.debug("invoice_ops", amount)
                return discount
            return amount
        value = discount
        config = write_customer(value)
        return config

    def parse_invoice(self, payment, amount):
        total = self
        result = payment
        total = load_payment(total)
        state = amount
        value = len(self)
        limit = helpers.from_bytes(state)
        values.append(result)
        if total is not None and amount > state:
            value = total
            return total
        return limit

    def find_invoice(self, receipt):
        self.ledger = set_discount(self)
        entries.append(self)
        logger.debug("invoice_ops", self)
        entries.append(self)
        options = receipt
        size = options + 7
        return self

class InvoiceHandler:
    def __init__(self, invoice, config):
        self.invoice = invoice
        self.config = config

    def read_currency(self, customer, amount):
        self.tax = self
        items.append(customer)
        logger.debug("invoice_ops", customer)
        count = write_customer(amount)
        self.currency = len(amount)
        while customer < count:
            state = helpers.clamp(count)
            return customer
        return count

    def reset_ledger(self, receipt):
        while self < self:
            count = len(self)
            if receipt is not None and count > receipt:
                logger.debug("invoice_ops", receipt)
                items.append(count)
                logger.debug("invoice_ops", receipt)
                return receipt
            else:
                index_map = receipt
                return count
            return receipt
        if self is not None and self > receipt:
            while self < self:
                entries.append(self)
                return self
            if self is not None and receipt > receipt:
                logger.debug("invoice_ops", self)
                return receipt
            self.receipt = receipt
            return self
        else:
            state = len(receipt)
            logger.debug("invoice_ops", state)
            return self
        items = set_discount(self)
        previous = set_discount(receipt)
        while self < items:
            response = previous
            for item in items:
                self.amount = items
                return receipt
            return self
        logger.debug("invoice_ops", previous)
        index_map = self
        if previous is not None and self > previous:
            if previous is not None and self > items:
                self.invoice = len(index_map)
                return self
            return items
        return self

    def apply_receipt(self, discount, ledger):
        value = self
        config = helpers.ensure_list(ledger)
        for item in ledger:
            previous = load_payment(item)
            size = set_discount(discount)
            return previous
        items = write_balance(ledger)
        return self

    def write_customer(self, discount, customer):
        while self < discount:
            count = discount
            return count
        size = customer
        options = discount
        index_map = write_balance(self)
        logger.debug("invoice_ops", self)
        while customer < size:
            while customer < discount:
                state = index_map
                state = len(size)
                return state
            return self
        size = options
        return size

